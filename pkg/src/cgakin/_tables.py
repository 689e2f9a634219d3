"""Blade bitmask tables for G(4,1).

Basis vectors in canonical order (e1, e2, e3, e, ebar) with metric
(+1, +1, +1, +1, -1).  A basis blade is a 5-bit mask; bit k set means the
k-th basis vector is a factor, factors in ascending order.  The geometric
product of two basis blades is a single blade: the XOR of the masks, with a
sign from transposition counting plus one metric factor per repeated vector.

Everything here is plain numpy so it can be checked against a naive symbolic
oracle in the tests; the hot-path kernels consume these arrays.
"""

import numpy as np

DIM = 32
METRIC = np.array([1.0, 1.0, 1.0, 1.0, -1.0])

# Bitmasks of the individual basis vectors, then common derived blades.
E1, E2, E3, EPLUS, EMINUS = 1, 2, 4, 8, 16
I3_MASK = E1 | E2 | E3
I5_MASK = 0b11111


def _popcount(x: int) -> int:
    return bin(x).count("1")


GRADE = np.array([_popcount(i) for i in range(DIM)], dtype=np.int64)


def blade_product(i: int, j: int) -> tuple[int, float]:
    """Product of basis blades i, j -> (bitmask, sign incl. metric factors)."""
    sign = 1.0
    swaps = 0
    for b in range(5):
        if j & (1 << b):
            swaps += _popcount(i >> (b + 1))
    if swaps % 2:
        sign = -sign
    common = i & j
    for b in range(5):
        if common & (1 << b):
            sign *= METRIC[b]
    return i ^ j, sign


# Dense product triples: for all (i, j), output index and sign.
_ai, _bi, _oi, _sg = [], [], [], []
for _i in range(DIM):
    for _j in range(DIM):
        _k, _s = blade_product(_i, _j)
        _ai.append(_i)
        _bi.append(_j)
        _oi.append(_k)
        _sg.append(_s)

GP_A = np.array(_ai, dtype=np.int64)
GP_B = np.array(_bi, dtype=np.int64)
GP_O = np.array(_oi, dtype=np.int64)
GP_S = np.array(_sg, dtype=np.float64)

# Outer product keeps the terms with no repeated vector.
OP_S = np.where((GP_A & GP_B) == 0, GP_S, 0.0)
# Left contraction keeps the terms where grade(out) = grade(b) - grade(a);
# valid for a diagonal metric, where a .| b = <a b>_{s-r} on blades.
LC_S = np.where(GRADE[GP_O] == GRADE[GP_B] - GRADE[GP_A], GP_S, 0.0)

# Reverse flips factor order: sign (-1)^(k(k-1)/2) per grade k.
REVERSE_SIGN = np.array(
    [(-1.0) ** (int(GRADE[i]) * (int(GRADE[i]) - 1) // 2) for i in range(DIM)]
)

# Duality: A* = A I5^{-1}.  I5^2 = -1 in G(4,1), so I5^{-1} = -I5.
# Right-multiplication by a single blade permutes coefficients with signs.
_i5sq = blade_product(I5_MASK, I5_MASK)[1]
I5_SQUARE = _i5sq  # -1.0

DUAL_IDX = np.empty(DIM, dtype=np.int64)
DUAL_SIGN = np.empty(DIM, dtype=np.float64)
UNDUAL_IDX = np.empty(DIM, dtype=np.int64)
UNDUAL_SIGN = np.empty(DIM, dtype=np.float64)
for _i in range(DIM):
    _k, _s = blade_product(_i, I5_MASK)
    DUAL_IDX[_i] = _k
    DUAL_SIGN[_i] = -_s  # times I5^{-1} = -I5
    UNDUAL_IDX[_i] = _k
    UNDUAL_SIGN[_i] = _s

# Coefficient slots used throughout for fast access.
IDX_SCALAR = 0
IDX_E1, IDX_E2, IDX_E3 = E1, E2, E3
IDX_E12 = E1 | E2
IDX_E13 = E1 | E3
IDX_E23 = E2 | E3
IDX_EP, IDX_EM = EPLUS, EMINUS
G3_MASK = np.array([(i & ~I3_MASK) == 0 for i in range(DIM)])
EVEN_MASK = (GRADE % 2) == 0
