"""Frozen reference counts and fixtures used by the verification suites.

The run-count table and the m-fold table are the published reference
values for doubled/m-fold Stirling words; every number here is
re-derivable in-repo (exhaustive filtering, the partition bijection, or
the closed formulas) and the verification suites exist to re-derive
them.  The order-4 pair list is the complete correspondence between
canonical partitions of [-3, 3] and flattened doubled words of order 4.
"""

# n -> (total words, flattened words, {run count: flattened words with that many runs})
TABLE1: dict[int, tuple[int, int, dict[int, int]]] = {
    1: (1, 1, {1: 1}),
    2: (3, 2, {1: 1, 2: 1}),
    3: (15, 6, {1: 1, 2: 5}),
    4: (105, 24, {1: 1, 2: 15, 3: 8}),
    5: (945, 116, {1: 1, 2: 37, 3: 70, 4: 8}),
    6: (10395, 648, {1: 1, 2: 83, 3: 374, 4: 190}),
    7: (135135, 4088, {1: 1, 2: 177, 3: 1596, 4: 2034, 5: 280}),
    8: (2027025, 28640, {1: 1, 2: 367, 3: 6012, 4: 15260, 5: 6720, 6: 280}),
    9: (34459425, 219920, {1: 1, 2: 749, 3: 20994, 4: 93764, 5: 88732, 6: 15680}),
    10: (654729075, 1832224,
         {1: 1, 2: 1515, 3: 69842, 4: 508538, 5: 866796, 6: 363132, 7: 22400}),
}

# (n, m) -> flattened m-fold words of order n, for n = 1..7, m = 2..5
TABLE2: dict[tuple[int, int], int] = {
    (1, 2): 1, (1, 3): 1, (1, 4): 1, (1, 5): 1,
    (2, 2): 2, (2, 3): 3, (2, 4): 4, (2, 5): 5,
    (3, 2): 6, (3, 3): 12, (3, 4): 20, (3, 5): 30,
    (4, 2): 24, (4, 3): 63, (4, 4): 128, (4, 5): 225,
    (5, 2): 116, (5, 3): 405, (5, 4): 1008, (5, 5): 2075,
    (6, 2): 648, (6, 3): 3024, (6, 4): 9280, (6, 5): 22500,
    (7, 2): 4088, (7, 3): 25515, (7, 4): 96704, (7, 5): 276875,
}

# The complete order-4 correspondence: canonical partition text <-> word text.
PAIRS_ORDER4: list[tuple[str, str]] = [
    ("0 | 1 | 2 | 3", "1 1 2 2 3 3 4 4"),
    ("0 | 1 | 2 3", "1 1 2 2 3 4 4 3"),
    ("0 | -2 1 | 3", "1 1 3 3 2 2 4 4"),
    ("0 2 | 1 | 3", "1 3 3 1 2 2 4 4"),
    ("0 | 1 3 | 2", "1 1 2 4 4 2 3 3"),
    ("0 3 | 1 | 2", "1 4 4 1 2 2 3 3"),
    ("0 | 1 2 | 3", "1 1 2 3 3 2 4 4"),
    ("0 | -3 1 | 2", "1 1 4 4 2 2 3 3"),
    ("0 | 1 | -3 2", "1 1 2 2 4 4 3 3"),
    ("0 1 | 2 | 3", "1 2 2 1 3 3 4 4"),
    ("0 1 | -3 2", "1 2 2 1 4 4 3 3"),
    ("0 1 2 | 3", "1 2 2 3 3 1 4 4"),
    ("0 1 | 2 3", "1 2 2 1 3 4 4 3"),
    ("0 | 1 2 3", "1 1 2 3 3 4 4 2"),
    ("0 2 | 1 3", "1 3 3 1 2 4 4 2"),
    ("0 2 3 | 1", "1 3 3 4 4 1 2 2"),
    ("0 | -2 1 3", "1 1 3 3 2 4 4 2"),
    ("0 2 | -3 1", "1 3 3 1 4 4 2 2"),
    ("0 | -2 -3 1", "1 1 3 3 4 4 2 2"),
    ("0 3 | -2 1", "1 4 4 1 3 3 2 2"),
    ("0 1 3 | 2", "1 2 2 4 4 1 3 3"),
    ("0 3 | 1 2", "1 4 4 1 2 3 3 2"),
    ("0 | -3 1 2", "1 1 4 4 2 3 3 2"),
    ("0 1 2 3", "1 2 2 3 3 4 4 1"),
]
