"""Community detection with swarm optimizers and pairwise prasatul-matrix comparison."""

from .fitness import avi, isolability
from .graph import DATASETS, Graph, average_degree, builtin_dataset, load_edge_list
from .partition import Partition, clamp, communities, decode, random_position

__version__ = "0.1.0"
