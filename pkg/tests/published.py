"""Published reference values used as test oracles.

Sources: OEIS A000372 (labeled counts), A003182 (class counts), A007695
(profile counts, offset by one for the constant-1 function), and the
published per-profile and per-minterm-count tables for five to seven
variables.
"""

# labeled counts D(n), n = 0..8
DEDEKIND = {
    0: 2,
    1: 3,
    2: 6,
    3: 20,
    4: 168,
    5: 7581,
    6: 7828354,
    7: 2414682040998,
    8: 56130437228687557907788,
}

# class counts R(n), n = 0..7
CLASS_COUNTS = {0: 2, 1: 3, 2: 5, 3: 10, 4: 30, 5: 210, 6: 16353, 7: 490013148}

# number of realizable profiles (all-zero included, constant-1 has none)
PROFILE_COUNTS = {
    0: 1,
    1: 2,
    2: 4,
    3: 9,
    4: 25,
    5: 95,
    6: 552,
    7: 5460,
    8: 100708,
    9: 3718353,
}

# classes with k minimal terms, k = 2..11
R_K_5 = [13, 30, 49, 48, 34, 18, 7, 2, 2, 0]
R_K_6 = [22, 84, 287, 787, 1661, 2630, 3164, 2890, 2159, 1327]
R_K_7_PARTIAL = {2: 34, 3: 202, 4: 1321}

# classes with trivial stabilizer, n = 1..6
ASYMMETRIC = {1: 0, 2: 1, 3: 0, 4: 0, 5: 7, 6: 7281}

# the full five-variable class count by profile (95 rows summing to 209;
# the constant-1 function has no profile and accounts for R(5) = 210)
R5_BY_PROFILE = {
    (0, 0, 0, 0, 0): 1,
    (1, 0, 0, 0, 0): 1,
    (2, 0, 0, 0, 0): 1,
    (3, 0, 0, 0, 0): 1,
    (4, 0, 0, 0, 0): 1,
    (5, 0, 0, 0, 0): 1,
    (0, 1, 0, 0, 0): 1,
    (1, 1, 0, 0, 0): 1,
    (2, 1, 0, 0, 0): 1,
    (3, 1, 0, 0, 0): 1,
    (0, 2, 0, 0, 0): 2,
    (1, 2, 0, 0, 0): 2,
    (2, 2, 0, 0, 0): 1,
    (0, 3, 0, 0, 0): 4,
    (1, 3, 0, 0, 0): 3,
    (2, 3, 0, 0, 0): 1,
    (0, 4, 0, 0, 0): 6,
    (1, 4, 0, 0, 0): 2,
    (0, 5, 0, 0, 0): 6,
    (1, 5, 0, 0, 0): 1,
    (0, 6, 0, 0, 0): 6,
    (1, 6, 0, 0, 0): 1,
    (0, 7, 0, 0, 0): 4,
    (0, 8, 0, 0, 0): 2,
    (0, 9, 0, 0, 0): 1,
    (0, 10, 0, 0, 0): 1,
    (0, 0, 1, 0, 0): 1,
    (1, 0, 1, 0, 0): 1,
    (2, 0, 1, 0, 0): 1,
    (0, 1, 1, 0, 0): 2,
    (1, 1, 1, 0, 0): 1,
    (0, 2, 1, 0, 0): 4,
    (1, 2, 1, 0, 0): 1,
    (0, 3, 1, 0, 0): 6,
    (1, 3, 1, 0, 0): 1,
    (0, 4, 1, 0, 0): 6,
    (0, 5, 1, 0, 0): 4,
    (0, 6, 1, 0, 0): 2,
    (0, 7, 1, 0, 0): 1,
    (0, 0, 2, 0, 0): 2,
    (1, 0, 2, 0, 0): 1,
    (0, 1, 2, 0, 0): 4,
    (1, 1, 2, 0, 0): 1,
    (0, 2, 2, 0, 0): 7,
    (0, 3, 2, 0, 0): 6,
    (0, 4, 2, 0, 0): 4,
    (0, 5, 2, 0, 0): 1,
    (0, 0, 3, 0, 0): 4,
    (1, 0, 3, 0, 0): 1,
    (0, 1, 3, 0, 0): 6,
    (0, 2, 3, 0, 0): 6,
    (0, 3, 3, 0, 0): 4,
    (0, 4, 3, 0, 0): 1,
    (0, 0, 4, 0, 0): 6,
    (1, 0, 4, 0, 0): 1,
    (0, 1, 4, 0, 0): 6,
    (0, 2, 4, 0, 0): 4,
    (0, 3, 4, 0, 0): 1,
    (0, 4, 4, 0, 0): 1,
    (0, 0, 5, 0, 0): 6,
    (0, 1, 5, 0, 0): 4,
    (0, 2, 5, 0, 0): 1,
    (0, 0, 6, 0, 0): 6,
    (0, 1, 6, 0, 0): 2,
    (0, 0, 7, 0, 0): 4,
    (0, 1, 7, 0, 0): 1,
    (0, 0, 8, 0, 0): 2,
    (0, 0, 9, 0, 0): 1,
    (0, 0, 10, 0, 0): 1,
    (0, 0, 0, 1, 0): 1,
    (1, 0, 0, 1, 0): 1,
    (0, 1, 0, 1, 0): 1,
    (0, 2, 0, 1, 0): 1,
    (0, 3, 0, 1, 0): 1,
    (0, 4, 0, 1, 0): 1,
    (0, 0, 1, 1, 0): 1,
    (0, 1, 1, 1, 0): 1,
    (0, 2, 1, 1, 0): 1,
    (0, 0, 2, 1, 0): 2,
    (0, 1, 2, 1, 0): 1,
    (0, 0, 3, 1, 0): 3,
    (0, 1, 3, 1, 0): 1,
    (0, 0, 4, 1, 0): 2,
    (0, 0, 5, 1, 0): 1,
    (0, 0, 6, 1, 0): 1,
    (0, 0, 0, 2, 0): 1,
    (0, 1, 0, 2, 0): 1,
    (0, 0, 1, 2, 0): 1,
    (0, 0, 2, 2, 0): 1,
    (0, 0, 3, 2, 0): 1,
    (0, 0, 0, 3, 0): 1,
    (0, 0, 1, 3, 0): 1,
    (0, 0, 0, 4, 0): 1,
    (0, 0, 0, 5, 0): 1,
    (0, 0, 0, 0, 1): 1,
}

# six-variable worked example: packed words and minimal terms
EXAMPLE64_BITSTRING = (
    "1111111011111110111111001000000011111010111010101111100000000000"
)
EXAMPLE64_WORDS = (20938623, 2053983)
EXAMPLE64_TERMS = [
    (1, 2, 4),
    (3, 4),
    (1, 5),
    (2, 3, 5),
    (1, 2, 3, 6),
    (2, 4, 6),
    (2, 5, 6),
    (3, 5, 6),
]

# the largest seven-variable profile and its class count
R7_LARGEST_PROFILE = (0, 0, 7, 7, 0, 0, 0)
R7_LARGEST_COUNT = 5443511

R7_NAIVE_LOWER_BOUND = 479103580
