"""Bilinear anticommutative products given by sparse structure constants.

A table stores constants c[i,j,k] (1-based, only nonzero entries kept)
defining e_i x e_j = sum_k c[i,j,k] e_k. Antisymmetry in the first index
pair, c[j,i,k] == -c[i,j,k], is a structural invariant enforced at
construction; it makes every stored product anticommutative. Total
antisymmetry in all three indices holds for the canonical 3- and
7-dimensional tables but is deliberately not required, so arbitrary
anticommutative candidates can be represented and then falsified.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Sequence

from .rationals import ZERO, as_rational, format_rational
from .vectors import Vector, _require_same_dim

#: The seven oriented components generating the canonical 7D product; each
#: unordered triple is one line of the Fano plane.
CROSS7_COMPONENTS: tuple[tuple[int, int, int], ...] = (
    (1, 2, 3),
    (2, 4, 6),
    (4, 3, 5),
    (6, 5, 1),
    (5, 7, 2),
    (7, 1, 4),
    (3, 6, 7),
)

BUILTIN_KINDS = ("cross3", "cross7")


class TableFormatError(ValueError):
    """A table literal or file does not conform to the JSON schema."""


class ProductTable:
    """Immutable structure-constant table; build via :func:`make_table`."""

    __slots__ = ("_dim", "_constants", "_rows")

    def __init__(self, dim: int, constants: dict):
        object.__setattr__(self, "_dim", dim)
        object.__setattr__(self, "_constants", constants)
        object.__setattr__(self, "_rows", None)

    @property
    def dim(self) -> int:
        return self._dim

    def constant(self, i: int, j: int, k: int) -> Fraction:
        """c[i,j,k]; exact zero for any absent triple."""
        for idx in (i, j, k):
            if not 1 <= idx <= self._dim:
                raise IndexError(f"index {idx} out of range 1..{self._dim}")
        return self._constants.get((i, j, k), ZERO)

    def nonzero_items(self) -> list[tuple[tuple[int, int, int], Fraction]]:
        """All nonzero constants, sorted lexicographically by (i, j, k)."""
        return sorted(self._constants.items())

    def rows(self) -> tuple:
        """Per-first-index adjacency: rows()[i] is a tuple of (j, k, c).

        Cached; the table is immutable so this is safe to share.
        """
        cached = self._rows
        if cached is None:
            buckets: list[list] = [[] for _ in range(self._dim + 1)]
            for (i, j, k), c in sorted(self._constants.items()):
                buckets[i].append((j, k, c))
            cached = tuple(tuple(b) for b in buckets)
            object.__setattr__(self, "_rows", cached)
        return cached

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ProductTable)
            and self._dim == other._dim
            and self._constants == other._constants
        )

    def __hash__(self) -> int:
        return hash((self._dim, tuple(sorted(self._constants.items()))))

    def __setattr__(self, name, value):
        raise AttributeError("ProductTable is immutable")

    def __repr__(self) -> str:
        return f"ProductTable(dim={self._dim}, nonzero={len(self._constants)})"


def make_table(dim: int, entries: Iterable[Sequence]) -> ProductTable:
    """Build a table from (i, j, k, c) entries.

    Only one orientation per constant needs to be given; the antisymmetric
    image c[j,i,k] = -c[i,j,k] is filled in automatically. Duplicate
    entries must agree (directly or through antisymmetry) or the whole
    table is rejected.
    """
    if dim < 1:
        raise ValueError("table dimension must be positive")
    constants: dict = {}
    for entry in entries:
        i, j, k, c = entry
        for idx in (i, j, k):
            if not isinstance(idx, int) or not 1 <= idx <= dim:
                raise IndexError(f"index {idx} out of range 1..{dim}")
        value = as_rational(c)
        for key, val in (((i, j, k), value), ((j, i, k), -value)):
            if key in constants and constants[key] != val:
                raise ValueError(
                    f"contradictory entries for c{key}: "
                    f"{format_rational(constants[key])} vs {format_rational(val)}"
                )
            constants[key] = val
    return ProductTable(dim, {key: val for key, val in constants.items() if val != 0})


def canonical_table(kind: str) -> ProductTable:
    """The classical 3D product ("cross3") or the canonical 7D one ("cross7").

    Both are built by totally antisymmetrizing their independent components
    (value 1 on each listed orientation), giving 6 and 42 signed nonzero
    entries respectively.
    """
    if kind == "cross3":
        dim, triples = 3, ((1, 2, 3),)
    elif kind == "cross7":
        dim, triples = 7, CROSS7_COMPONENTS
    else:
        raise ValueError(f"unknown table kind {kind!r}; expected one of {BUILTIN_KINDS}")
    entries = []
    for i, j, k in triples:
        # even permutations carry +1; make_table supplies the odd ones
        entries.extend(((i, j, k, 1), (j, k, i, 1), (k, i, j, 1)))
    return make_table(dim, entries)


def cross(t: ProductTable, a: Vector, b: Vector) -> Vector:
    """Bilinear extension of the table: sum over a_i b_j (e_i x e_j)."""
    _require_same_dim(a, b)
    if a.dim != t.dim:
        raise ValueError(f"dimension mismatch: table {t.dim} vs vectors {a.dim}")
    av = a.components
    bv = b.components
    out = [ZERO] * t.dim
    for (i, j, k), c in t._constants.items():
        ai = av[i - 1]
        if ai:
            bj = bv[j - 1]
            if bj:
                out[k - 1] += c * ai * bj
    return Vector(out)


def structure_constant(t: ProductTable, i: int, j: int, k: int) -> Fraction:
    return t.constant(i, j, k)


def table_to_json_dict(t: ProductTable) -> dict:
    """Canonical serialization: one orientation (i < j) per constant,
    entries sorted lexicographically by (i, j, k)."""
    entries = []
    for (i, j, k), c in t.nonzero_items():
        if i < j:
            entries.append({"i": i, "j": j, "k": k, "c": format_rational(c)})
    return {"dimension": t.dim, "entries": entries}


def table_from_json_dict(obj) -> ProductTable:
    """Inverse of :func:`table_to_json_dict`, with schema validation."""
    if not isinstance(obj, dict):
        raise TableFormatError("table document must be a JSON object")
    dim = obj.get("dimension")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise TableFormatError("'dimension' must be a positive integer")
    raw_entries = obj.get("entries")
    if not isinstance(raw_entries, list):
        raise TableFormatError("'entries' must be a JSON array")
    entries = []
    for pos, raw in enumerate(raw_entries):
        if not isinstance(raw, dict):
            raise TableFormatError(f"entry {pos} must be a JSON object")
        unknown = set(raw) - {"i", "j", "k", "c"}
        if unknown:
            raise TableFormatError(f"entry {pos} has unknown keys {sorted(unknown)}")
        try:
            i, j, k, c = raw["i"], raw["j"], raw["k"], raw["c"]
        except KeyError as missing:
            raise TableFormatError(f"entry {pos} is missing key {missing}") from None
        for name, idx in (("i", i), ("j", j), ("k", k)):
            if not isinstance(idx, int) or isinstance(idx, bool):
                raise TableFormatError(f"entry {pos}: '{name}' must be an integer")
        if isinstance(c, bool) or isinstance(c, float):
            raise TableFormatError(f"entry {pos}: 'c' must be a rational string")
        entries.append((i, j, k, c))
    try:
        return make_table(dim, entries)
    except (ValueError, IndexError) as exc:
        raise TableFormatError(str(exc)) from None


def dump_table(t: ProductTable) -> str:
    """Bit-exact canonical JSON text for a table (stable key order,
    sorted entries, trailing newline)."""
    return json.dumps(table_to_json_dict(t), indent=2) + "\n"


def load_table(text: str) -> ProductTable:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableFormatError(f"invalid JSON: {exc}") from None
    return table_from_json_dict(obj)
