"""Hand-transcribed fused-scale tables, kept independent of the library.

These are the fixed reference the fusion code must reproduce cell by
cell. Rows are scale-1 terms in V..X order, columns scale-2 terms in the
same order. Do not derive these from library code.
"""

TERM_ORDER = ["V", "L", "M", "H", "X"]

EXPECTED_LINGUISTIC_CELLS = [
    ["V", "VL", "L", "LM", "M"],
    ["VL", "L", "LM", "M", "MH"],
    ["L", "LM", "M", "MH", "H"],
    ["LM", "M", "MH", "H", "HX"],
    ["M", "MH", "H", "HX", "X"],
]

EXPECTED_QUANTITATIVE_CELLS = [
    [1.0, 1.5, 2.0, 2.5, 3.0],
    [1.5, 2.0, 2.5, 3.0, 3.5],
    [2.0, 2.5, 3.0, 3.5, 4.0],
    [2.5, 3.0, 3.5, 4.0, 4.5],
    [3.0, 3.5, 4.0, 4.5, 5.0],
]

EXPECTED_INDIVIDUAL_SCALE = [
    ("V", "Very low", 1),
    ("L", "Low", 2),
    ("M", "Moderate", 3),
    ("H", "High", 4),
    ("X", "Very high", 5),
]

EXPECTED_FUSED_SCALE = [
    ("V", 1.0),
    ("VL", 1.5),
    ("L", 2.0),
    ("LM", 2.5),
    ("M", 3.0),
    ("MH", 3.5),
    ("H", 4.0),
    ("HX", 4.5),
    ("X", 5.0),
]
