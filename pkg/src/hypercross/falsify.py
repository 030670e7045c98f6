"""Seeded falsification sweep over dimensions where no cross product exists.

Candidate anticommutative tables are generated for n in {2, 4, 5, 6} and
each one is rejected with an exact certificate: an axiom violation on a
concrete input, or a basis-sum / obstruction mismatch. The battery runs
cheap exhaustive basis checks first, then seeded random vectors, then the
global sums, so every candidate fails deterministically on the earliest
applicable check.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional

from .identities import basis_sum_eq10, check_axioms, obstruction_report
from .rationals import format_rational
from .sampling import random_vector
from .tables import ProductTable, cross, make_table
from .vectors import basis, dot, norm_sq, vector_to_strings

SWEEP_DIMENSIONS = (2, 4, 5, 6)


@dataclass(frozen=True)
class FalsificationCertificate:
    """Why one candidate table cannot be a vector product."""

    dimension: int
    index: int
    kind: str            # "epsilon-embedding" | "random-antisymmetric" | "random-pairwise"
    rejected_by: str     # identity id, e.g. "eq4", "eq10", "obstruction"
    witness: dict

    def to_json_dict(self) -> dict:
        return {
            "dimension": self.dimension,
            "index": self.index,
            "kind": self.kind,
            "rejected_by": self.rejected_by,
            "witness": self.witness,
        }


def epsilon_embedding_table(dim: int) -> ProductTable:
    """The classical 3D table sitting inside R^dim, extra axes inert.

    For dim 2 this degenerates to the zero table (no room for any
    totally antisymmetric triple).
    """
    if dim < 2:
        raise ValueError("embedding needs dimension >= 2")
    if dim == 2:
        return make_table(2, [])
    return make_table(dim, [(1, 2, 3, 1), (2, 3, 1, 1), (3, 1, 2, 1)])


def random_antisymmetric_table(rng: random.Random, dim: int) -> ProductTable:
    """Totally antisymmetric candidate: each ascending triple draws a
    constant from {-1, 0, 1} and is expanded over all six orientations."""
    entries = []
    for i, j, k in itertools.combinations(range(1, dim + 1), 3):
        c = rng.choice((-1, 0, 1))
        if c:
            entries.extend(((i, j, k, c), (j, k, i, c), (k, i, j, c)))
    return make_table(dim, entries)


def random_pairwise_table(rng: random.Random, dim: int) -> ProductTable:
    """First-pair-antisymmetric candidate with otherwise arbitrary sparse
    {-1, 1} constants; total antisymmetry is not imposed."""
    entries = []
    for i in range(1, dim + 1):
        for j in range(i + 1, dim + 1):
            for k in range(1, dim + 1):
                if rng.random() < 0.35:
                    entries.append((i, j, k, rng.choice((-1, 1))))
    return make_table(dim, entries)


def reject_candidate(
    t: ProductTable, rng: random.Random, sample_count: int = 5
) -> Optional[tuple[str, dict]]:
    """Return (identity id, witness) for the first failed check, or None.

    Check order: eq2 and eq4 exhaustively on basis pairs, then the axiom
    battery on seeded random vectors, then the eq10 sum and the
    obstruction sums against their closed forms.
    """
    n = t.dim
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            ei, ej = basis(n, i), basis(n, j)
            prod = cross(t, ei, ej)
            di, dj = dot(prod, ei), dot(prod, ej)
            if di != 0 or dj != 0:
                return "eq2", {
                    "inputs": {"a": vector_to_strings(ei), "b": vector_to_strings(ej)},
                    "lhs": [format_rational(di), format_rational(dj)],
                    "rhs": ["0", "0"],
                }
            nsq = norm_sq(prod)
            if nsq != 1:
                return "eq4", {
                    "inputs": {"a": vector_to_strings(ei), "b": vector_to_strings(ej)},
                    "lhs": format_rational(nsq),
                    "rhs": "1",
                }

    pairs = [(random_vector(rng, n), random_vector(rng, n)) for _ in range(sample_count)]
    for report in check_axioms(t, pairs):
        if not report.holds:
            return report.identity, report.witness

    lhs, rhs = basis_sum_eq10(t)
    if lhs != rhs:
        return "eq10", {
            "inputs": {},
            "lhs": format_rational(lhs),
            "rhs": format_rational(rhs),
        }

    obs = obstruction_report(t)
    if not obs.holds:
        witness = obs.to_json_dict()
        del witness["holds"]
        return "obstruction", witness

    return None


def candidate_stream(rng: random.Random, dim: int, count: int):
    """Deterministic candidate sequence: the epsilon embedding first, then
    alternating totally antisymmetric and pairwise-only random tables."""
    for index in range(count):
        if index == 0:
            yield index, "epsilon-embedding", epsilon_embedding_table(dim)
        elif index % 2 == 1:
            yield index, "random-antisymmetric", random_antisymmetric_table(rng, dim)
        else:
            yield index, "random-pairwise", random_pairwise_table(rng, dim)


def falsification_sweep(
    dimensions=SWEEP_DIMENSIONS,
    per_dimension: int = 100,
    seed: int = 0,
    sample_count: int = 5,
) -> list[FalsificationCertificate]:
    """Generate and reject candidates in every swept dimension.

    Raises ArithmeticError if any candidate survives the battery; that
    would contradict the dimension obstruction and means the battery (or
    the generator) is broken.
    """
    if per_dimension < 1:
        raise ValueError("candidate count must be positive")
    certificates = []
    for dim in dimensions:
        rng = random.Random((seed, dim))
        for index, kind, table in candidate_stream(rng, dim, per_dimension):
            rejection = reject_candidate(table, rng, sample_count)
            if rejection is None:
                raise ArithmeticError(
                    f"candidate {index} in dimension {dim} survived the battery"
                )
            rejected_by, witness = rejection
            certificates.append(
                FalsificationCertificate(dim, index, kind, rejected_by, witness)
            )
    return certificates
