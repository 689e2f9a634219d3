"""Fixed-layout multivector arithmetic for G(4,1) and its G(3) subalgebra.

A multivector is 32 coefficients indexed by blade bitmask over the ordered
basis (e1, e2, e3, e, ebar) with metric (+,+,+,+,-).  The null basis used by
the conformal model is

    e0   = (ebar + e) / 2        (origin)
    einf = ebar - e              (point at infinity)

Operator glossary on Multivector:  ``*`` geometric product, ``^`` outer
product, ``|`` inner product (left contraction), ``~`` reverse.  The mixed
grade inner product is the left contraction throughout; on vectors it is the
plain metric dot product, and the duality identity (A ^ B)* = A | B* holds.

The dual is A* = A I5^{-1}.  Since I5^2 = -1, applying it twice gives -A;
undual(dual(A)) = A exactly.
"""

from __future__ import annotations

import numbers

import numpy as np

from . import _kernels as _k
from ._tables import DIM, GRADE, G3_MASK, I3_MASK, I5_MASK
from .errors import NegativeNormSquare

# Global "is zero" tolerance for coefficient predicates; configurable.
EPSILON = 1e-9


class Multivector:
    """Immutable-by-convention element of G(4,1)."""

    __slots__ = ("a",)

    def __init__(self, coeffs=None):
        if coeffs is None:
            self.a = np.zeros(DIM)
        else:
            arr = np.asarray(coeffs, dtype=np.float64)
            if arr.shape != (DIM,):
                raise ValueError(f"expected {DIM} coefficients, got {arr.shape}")
            self.a = arr

    # -- constructors -------------------------------------------------------
    @staticmethod
    def scalar(s: float) -> "Multivector":
        m = Multivector()
        m.a[0] = s
        return m

    @staticmethod
    def vector(x: float, y: float, z: float) -> "Multivector":
        m = Multivector()
        m.a[1] = x
        m.a[2] = y
        m.a[4] = z
        return m

    @staticmethod
    def from_vec3(v) -> "Multivector":
        v = np.asarray(v, dtype=float)
        return Multivector.vector(v[0], v[1], v[2])

    @staticmethod
    def blade(bitmask: int, coeff: float = 1.0) -> "Multivector":
        m = Multivector()
        m.a[bitmask] = coeff
        return m

    # -- products -----------------------------------------------------------
    def __mul__(self, other):
        if isinstance(other, Multivector):
            return Multivector(_k.gp(self.a, other.a))
        if isinstance(other, numbers.Real):
            return Multivector(self.a * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Real):
            return Multivector(self.a * float(other))
        return NotImplemented

    def __xor__(self, other):
        return Multivector(_k.op(self.a, other.a))

    def __or__(self, other):
        return Multivector(_k.lc(self.a, other.a))

    def __add__(self, other):
        if isinstance(other, Multivector):
            return Multivector(self.a + other.a)
        if isinstance(other, numbers.Real):
            return self + Multivector.scalar(float(other))
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Multivector):
            return Multivector(self.a - other.a)
        if isinstance(other, numbers.Real):
            return self - Multivector.scalar(float(other))
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Multivector(-self.a)

    def __truediv__(self, s: float):
        return Multivector(self.a / float(s))

    def __invert__(self):
        return Multivector(_k.rev(self.a))

    # -- structure ----------------------------------------------------------
    def coeff(self, bitmask: int) -> float:
        return float(self.a[bitmask])

    def __getitem__(self, bitmask: int) -> float:
        return float(self.a[bitmask])

    def grade(self, k: int) -> "Multivector":
        out = np.where(GRADE == k, self.a, 0.0)
        return Multivector(out)

    def grades(self, eps: float | None = None) -> tuple[int, ...]:
        eps = EPSILON if eps is None else eps
        present = sorted({int(GRADE[i]) for i in np.nonzero(np.abs(self.a) > eps)[0]})
        return tuple(present)

    def scalar_part(self) -> float:
        return float(self.a[0])

    def vec3(self) -> np.ndarray:
        """Euclidean vector part (e1, e2, e3 coefficients)."""
        return np.array([self.a[1], self.a[2], self.a[4]])

    def g3(self) -> "Multivector":
        """Projection onto the G(3) subalgebra (no e / ebar factor)."""
        return Multivector(np.where(G3_MASK, self.a, 0.0))

    def is_zero(self, eps: float | None = None) -> bool:
        eps = EPSILON if eps is None else eps
        return bool(np.all(np.abs(self.a) <= eps))

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.a)))

    def dual(self) -> "Multivector":
        return Multivector(_k.dual(self.a))

    def undual(self) -> "Multivector":
        return Multivector(_k.undual(self.a))

    def reverse(self) -> "Multivector":
        return Multivector(_k.rev(self.a))

    def norm(self) -> float:
        sq = float(_k.gp(self.a, _k.rev(self.a))[0])
        if sq < -EPSILON * max(1.0, float(np.abs(self.a).max()) ** 2):
            raise NegativeNormSquare(f"<A ~A>_0 = {sq} < 0")
        return float(np.sqrt(max(sq, 0.0)))

    def normalized(self) -> "Multivector":
        n = self.norm()
        if n <= 0.0:
            raise ZeroDivisionError("cannot normalize a null multivector")
        return Multivector(self.a / n)

    def __repr__(self):
        names = []
        for i in np.nonzero(np.abs(self.a) > 1e-12)[0]:
            label = _blade_name(int(i))
            names.append(f"{self.a[i]:+.6g}{label}")
        return "MV(" + (" ".join(names) if names else "0") + ")"


def _blade_name(mask: int) -> str:
    if mask == 0:
        return ""
    parts = []
    for bit, nm in ((1, "1"), (2, "2"), (4, "3"), (8, "p"), (16, "m")):
        if mask & bit:
            parts.append(nm)
    return "e" + "".join(parts)


# -- module-level operation names matching the kernel contracts --------------

def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    return a * b


def outer_product(a: Multivector, b: Multivector) -> Multivector:
    return a ^ b


def inner_product(a: Multivector, b: Multivector) -> Multivector:
    """Left contraction; on same-grade blades this is the scalar product."""
    return a | b


def dual(a: Multivector) -> Multivector:
    return a.dual()


def undual(a: Multivector) -> Multivector:
    return a.undual()


def reverse(a: Multivector) -> Multivector:
    return ~a


def grade_project(a: Multivector, k: int) -> Multivector:
    return a.grade(k)


def norm(a: Multivector) -> float:
    return a.norm()


# -- fixed elements -----------------------------------------------------------

e1 = Multivector.blade(0b00001)
e2 = Multivector.blade(0b00010)
e3 = Multivector.blade(0b00100)
eplus = Multivector.blade(0b01000)   # e  (square +1)
eminus = Multivector.blade(0b10000)  # ebar (square -1)
e0 = 0.5 * (eminus + eplus)
einf = eminus - eplus
I3 = Multivector.blade(I3_MASK)
I5 = Multivector.blade(I5_MASK)
ONE = Multivector.scalar(1.0)
