"""Euclidean geometric algebra of 3-space (and its planar subalgebra).

Multivectors are stored densely as 8 coefficients in the fixed blade order

    1, e1, e2, e3, e12, e13, e23, e123

The coefficients are not required to be floats: anything supporting ``+``,
``-`` and ``*`` works, which is how frame vectors carry second-order jets
through geometric products.  The planar algebra G2 is the e3-free part.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .errors import DomainError

BLADE_NAMES = ("1", "e1", "e2", "e3", "e12", "e13", "e23", "e123")
# bitmask of each blade: bit i set <=> e_{i+1} is a factor
_MASKS = (0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111)
_INDEX = {mask: i for i, mask in enumerate(_MASKS)}
GRADES = tuple(bin(mask).count("1") for mask in _MASKS)


def _reorder_sign(a: int, b: int) -> int:
    # number of transpositions needed to sort the concatenated factors
    swaps = 0
    a >>= 1
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return -1 if swaps & 1 else 1


# _PRODUCT[i][j] = (k, sign) with blade_i * blade_j = sign * blade_k
_PRODUCT = tuple(
    tuple((_INDEX[ma ^ mb], _reorder_sign(ma, mb)) for mb in _MASKS) for ma in _MASKS
)


def _is_scalar(x: Any) -> bool:
    return not isinstance(x, Multivector)


@dataclass(frozen=True)
class Multivector:
    """Element of G3 with dense coefficients in :data:`BLADE_NAMES` order."""

    coeffs: tuple

    def __post_init__(self):
        if len(self.coeffs) != 8:
            raise ValueError(f"a multivector needs 8 coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    # construction -------------------------------------------------------
    @classmethod
    def scalar(cls, s) -> "Multivector":
        return cls((s, 0, 0, 0, 0, 0, 0, 0))

    @classmethod
    def from_json(cls, data: Sequence[float]) -> "Multivector":
        return cls(tuple(float(c) for c in data))

    def to_json(self) -> list:
        return [float(c) for c in self.coeffs]

    # arithmetic ---------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Multivector):
            return Multivector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))
        return self + Multivector.scalar(other)

    __radd__ = __add__

    def __neg__(self):
        return Multivector(tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        return Multivector(tuple(a * other for a in self.coeffs))

    def __rmul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(other, self)
        return Multivector(tuple(other * a for a in self.coeffs))

    def __truediv__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, vector_inverse(other))
        return Multivector(tuple(a / other for a in self.coeffs))

    # parts and involutions ---------------------------------------------
    def grade(self, g: int) -> "Multivector":
        return grade_part(self, g)

    @property
    def scalar_part(self):
        return self.coeffs[0]

    @property
    def vector_part(self) -> tuple:
        """The (e1, e2, e3) coefficients."""
        return self.coeffs[1:4]

    def reverse(self) -> "Multivector":
        # grades 2 and 3 flip sign under reversion
        return Multivector(
            tuple(c if GRADES[i] in (0, 1) else -c for i, c in enumerate(self.coeffs))
        )

    def grade_involution(self) -> "Multivector":
        return Multivector(tuple(-c if GRADES[i] % 2 else c for i, c in enumerate(self.coeffs)))

    def conjugate(self) -> "Multivector":
        """Clifford conjugate: reversion composed with grade involution."""
        return self.reverse().grade_involution()

    def norm2(self):
        """Scalar part of ``a ~a``; the squared Euclidean norm of the coefficients."""
        return geometric_product(self, self.reverse()).coeffs[0]

    def is_planar(self, tol: float = 0.0) -> bool:
        """True when no blade containing e3 carries weight."""
        return all(abs(self.coeffs[i]) <= tol for i in (3, 5, 6, 7))

    def allclose(self, other: "Multivector", tol: float = 1e-12) -> bool:
        return max_abs_diff(self, other) <= tol

    def __repr__(self) -> str:
        terms = [
            f"{c!r}" if name == "1" else f"{c!r}*{name}"
            for c, name in zip(self.coeffs, BLADE_NAMES)
            if not (isinstance(c, (int, float)) and c == 0)
        ]
        return "Multivector(" + (" + ".join(terms) if terms else "0") + ")"


ONE = Multivector.scalar(1.0)
E1 = Multivector((0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0))
E2 = Multivector((0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0))
E3 = Multivector((0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0))
E12 = Multivector((0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0))
E13 = Multivector((0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0))
E23 = Multivector((0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0))
E123 = Multivector((0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0))


def vector(x1, x2, x3=0.0) -> Multivector:
    """Grade-1 multivector ``x1 e1 + x2 e2 + x3 e3``."""
    return Multivector((0.0, x1, x2, x3, 0.0, 0.0, 0.0, 0.0))


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    """Clifford product for the Euclidean quadratic form (all e_i square to +1)."""
    out: list = [0.0] * 8
    for i, ca in enumerate(a.coeffs):
        if isinstance(ca, (int, float)) and ca == 0:
            continue
        row = _PRODUCT[i]
        for j, cb in enumerate(b.coeffs):
            if isinstance(cb, (int, float)) and cb == 0:
                continue
            k, sign = row[j]
            term = ca * cb
            out[k] = out[k] + term if sign > 0 else out[k] - term
    return Multivector(tuple(out))


def grade_part(a: Multivector, g: int) -> Multivector:
    """Projection of ``a`` onto the blades of grade ``g``."""
    if g not in (0, 1, 2, 3):
        raise ValueError(f"grade must be 0, 1, 2 or 3, got {g!r}")
    return Multivector(tuple(c if GRADES[i] == g else 0.0 for i, c in enumerate(a.coeffs)))


def is_vector(a: Multivector, tol: float = 0.0) -> bool:
    return all(abs(c) <= tol for i, c in enumerate(a.coeffs) if GRADES[i] != 1)


def dot(a: Multivector, b: Multivector):
    """Inner product of two vectors, ``(ab + ba)/2`` read as a scalar."""
    sym = geometric_product(a, b) + geometric_product(b, a)
    return 0.5 * sym.coeffs[0]


def vector_inverse(v: Multivector) -> Multivector:
    """``v / |v|^2`` for a nonzero vector, so that ``v * vector_inverse(v) == 1``."""
    if not is_vector(v):
        raise ValueError("vector_inverse expects a grade-1 multivector")
    n2 = sum(c * c for c in v.vector_part)
    if n2 == 0:
        raise DomainError("the zero vector has no inverse")
    return v * (1.0 / n2)


def max_abs_diff(a: Multivector, b: Multivector) -> float:
    return max(abs(x - y) for x, y in zip(a.coeffs, b.coeffs))


def random_multivector(rng, scale: float = 1.0, grades: Iterable[int] = (0, 1, 2, 3)) -> Multivector:
    """Multivector with standard-normal coefficients on the requested grades."""
    keep = set(grades)
    return Multivector(
        tuple(float(scale * rng.standard_normal()) if GRADES[i] in keep else 0.0 for i in range(8))
    )


def norm(v: Multivector) -> float:
    return math.sqrt(v.norm2())
