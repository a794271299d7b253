"""Reported reference numbers, printed next to measured ones in reports.

These are for side-by-side inspection only; nothing asserts against them
except the averaging arithmetic check on the MFO karate row.
"""

DATASET_STATS = {
    "karate": (34, 78, 4.58),
    "dolphin": (62, 159, 5.12),
    "football": (115, 613, 10.66),
}

MEAN_AVI = {
    "karate": {"GWO": 0.2430, "MFO": 0.3089, "SCA": 0.2494, "WOA": 0.1678},
    "dolphin": {"GWO": 0.1540, "MFO": 0.1595, "SCA": 0.1550, "WOA": 0.1330},
    "football": {"GWO": 0.0288, "MFO": 0.0329, "SCA": 0.0289, "WOA": 0.0294},
}

# primary MFO against each alternative: (DO, DC, KO, KC, KT)
MFO_SCORES = {
    "karate": {
        "GWO": (0.98, 0.98, 1.00, 1.00, 1.00),
        "SCA": (0.98, 0.98, 1.00, 1.00, 1.00),
        "WOA": (0.06, 0.75, 0.53, 1.00, 1.00),
    },
    "dolphin": {
        "GWO": (1.44, 0.76, 1.00, 0.78, 1.00),
        "SCA": (1.44, 0.76, 1.00, 0.78, 1.00),
        "WOA": (0.17, 0.17, 0.31, 0.30, 0.64),
    },
    "football": {
        "GWO": (1.44, 0.75, 1.00, 0.76, 1.00),
        "SCA": (1.44, 0.75, 1.00, 0.76, 1.00),
        "WOA": (1.44, 0.75, 1.00, 0.76, 1.00),
    },
}

# averaged scores per primary algorithm: (ADO, ADC, AKO, AKC, AKT)
AVERAGED = {
    "karate": {
        "GWO": (0.0906, 0.0833, -0.6667, -0.7600, 0.1400),
        "MFO": (0.6732, 0.9036, 0.8433, 1.0000, 1.0000),
        "SCA": (0.2176, 0.0513, -0.6667, -0.7567, 0.1267),
        "WOA": (0.9028, 0.6340, 0.8033, 0.9400, 0.9800),
    },
    "dolphin": {
        "GWO": (0.2482, 0.1015, -0.7067, -0.7467, 0.1267),
        "MFO": (1.0206, 0.5654, 0.7700, 0.6200, 0.8800),
        "SCA": (-0.0321, -0.0287, -0.6267, -0.7500, 0.1133),
        "WOA": (1.0795, 0.8502, 0.7033, 0.6600, 0.8867),
    },
    "football": {
        "GWO": (0.4713, 0.1555, -0.3600, -0.5033, 0.2600),
        "MFO": (1.4430, 0.7451, 1.0000, 0.7600, 1.0000),
        "SCA": (0.2162, 0.0645, -0.3200, -0.4867, 0.2467),
        "WOA": (0.0500, -0.0190, -0.3200, -0.5800, 0.2200),
    },
}
