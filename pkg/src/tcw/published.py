"""Published numbers the reproduction harness checks against."""

# (i1, i2) -> generator polynomial at m = 3, for the code and for its dual
GENERATORS_M3 = {
    (0, 3): "x^13 + 2x^11 + x^10 + x^8 + x^6 + x^4 + 2x^3 + 1",
    (1, 2): "x^12 + x^11 + 2x^10 + x^9 + 2x^8 + 2x^7 + x^6 + x^5 + x^4 + 2x^3 + x^2 + x + 1",
    (0, 1): "x^12 + x^11 + x^10 + 2x^9 + x^8 + x^7 + x^6 + 2x^5 + 2x^4 + x^3 + 2x^2 + x + 1",
    (2, 3): "x^13 + 2x^10 + x^9 + x^7 + x^5 + x^3 + 2x^2 + 1",
}
DUAL_GENERATORS_M3 = {
    (0, 3): "x^13 + x^10 + 2x^9 + x^6 + 2x^4 + x^3 + 2x^2 + 2",
    (1, 2): "x^14 + 2x^13 + 2x^11 + 2x^10 + 2x^9 + x^8 + 2x^7 + x^6 + 2x^5 + x^4 + x^3 + x^2 + x + 2",
    (0, 1): "x^14 + 2x^13 + 2x^12 + 2x^11 + 2x^10 + x^9 + 2x^8 + x^7 + 2x^6 + x^5 + x^4 + x^3 + x + 2",
    (2, 3): "x^13 + x^11 + 2x^10 + x^9 + 2x^7 + x^4 + 2x^3 + 2",
}

# (i1, i2) -> ([n, k, d] of the code, [n, k, d] of its dual), ternary, m = 3
PARAMS_M3 = {
    (0, 3): ((26, 13, 8), (26, 13, 8)),
    (1, 2): ((26, 14, 7), (26, 12, 9)),
    (0, 1): ((26, 14, 7), (26, 12, 9)),
    (2, 3): ((26, 13, 8), (26, 13, 8)),
}

# family (0,3): m -> delta_max
DELTA_MAX_03 = {3: 5, 5: 11, 7: 19, 9: 43}

# q = 5, m = 3: (i1, i2) -> ([n, k, d], [n, k, d] of the dual)
PARAMS_Q5_M3 = {
    (2, 3): ((124, 62, 3), (124, 62, 3)),
    (0, 1): ((124, 63, 3), (124, 61, 4)),
    (0, 3): ((124, 63, 3), (124, 61, 4)),
    (1, 2): ((124, 62, 3), (124, 62, 3)),
    (1, 3): ((124, 62, 2), (124, 62, 2)),
    (0, 2): ((124, 63, 2), (124, 61, 4)),
}
