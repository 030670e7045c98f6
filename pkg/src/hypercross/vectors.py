"""Dense exact-rational vectors with the Euclidean inner product.

Basis indices are 1-based throughout the public interface, matching the
e_1..e_n labelling used everywhere else in the library.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .rationals import ZERO, as_rational, format_rational


class Vector:
    """Immutable n-dimensional vector of exact rationals, n >= 1."""

    __slots__ = ("_parts",)

    def __init__(self, components: Iterable):
        parts = tuple(as_rational(c) for c in components)
        if not parts:
            raise ValueError("vector dimension must be positive")
        object.__setattr__(self, "_parts", parts)

    @property
    def dim(self) -> int:
        return len(self._parts)

    @property
    def components(self) -> tuple[Fraction, ...]:
        return self._parts

    def component(self, i: int) -> Fraction:
        """Component i, 1-based."""
        if not 1 <= i <= len(self._parts):
            raise IndexError(f"component index {i} out of range 1..{len(self._parts)}")
        return self._parts[i - 1]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self._parts)

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self):
        return iter(self._parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Vector) and self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __add__(self, other: "Vector") -> "Vector":
        _require_same_dim(self, other)
        return Vector(a + b for a, b in zip(self._parts, other._parts))

    def __sub__(self, other: "Vector") -> "Vector":
        _require_same_dim(self, other)
        return Vector(a - b for a, b in zip(self._parts, other._parts))

    def __neg__(self) -> "Vector":
        return Vector(-a for a in self._parts)

    def __mul__(self, scalar) -> "Vector":
        s = as_rational(scalar)
        return Vector(s * a for a in self._parts)

    __rmul__ = __mul__

    def __setattr__(self, name, value):
        raise AttributeError("Vector is immutable")

    def __repr__(self) -> str:
        return "Vector([" + ", ".join(format_rational(c) for c in self._parts) + "])"


def _require_same_dim(a: Vector, b: Vector) -> None:
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")


def dot(a: Vector, b: Vector) -> Fraction:
    """Euclidean scalar product, exact."""
    _require_same_dim(a, b)
    total = ZERO
    for x, y in zip(a.components, b.components):
        total += x * y
    return total


def norm_sq(a: Vector) -> Fraction:
    """Squared Euclidean norm; zero iff the vector is zero."""
    total = ZERO
    for x in a.components:
        total += x * x
    return total


def zero(n: int) -> Vector:
    if n < 1:
        raise ValueError("vector dimension must be positive")
    return Vector([ZERO] * n)


def basis(n: int, i: int) -> Vector:
    """Orthonormal basis vector e_i of R^n, 1-based."""
    if n < 1:
        raise ValueError("vector dimension must be positive")
    if not 1 <= i <= n:
        raise IndexError(f"basis index {i} out of range 1..{n}")
    parts = [ZERO] * n
    parts[i - 1] = Fraction(1)
    return Vector(parts)


def axpy(s, a: Vector, b: Vector) -> Vector:
    """s*a + b, exactly."""
    _require_same_dim(a, b)
    scalar = as_rational(s)
    return Vector(scalar * x + y for x, y in zip(a.components, b.components))


def vector_to_strings(v: Vector) -> list[str]:
    """Interchange form: JSON-ready list of canonical rational strings."""
    return [format_rational(c) for c in v.components]


def vector_from_json(obj) -> Vector:
    """Read a vector from its interchange form (a list of rational strings).

    Integer JSON numbers are tolerated and normalized; anything else is
    rejected.
    """
    if not isinstance(obj, (list, tuple)):
        raise ValueError("vector must be a JSON array of rational strings")
    parts = []
    for item in obj:
        if isinstance(item, bool) or isinstance(item, float):
            raise ValueError(f"vector component {item!r} is not an exact rational")
        parts.append(as_rational(item))
    if not parts:
        raise ValueError("vector must have at least one component")
    return Vector(parts)
