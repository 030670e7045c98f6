"""Seeded random rational vectors for identity spot checks.

Components are p/q with p in [-9, 9] and q in [1, 4]: small enough to keep
exact arithmetic fast, rich enough to exercise bilinearity fully. All
draws go through a caller-supplied ``random.Random`` so identical seeds
reproduce identical samples.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .vectors import Vector


def rng_for_seed(seed: int) -> random.Random:
    return random.Random(seed)


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 4))


def random_vector(rng: random.Random, dim: int) -> Vector:
    return Vector(random_rational(rng) for _ in range(dim))


def random_vectors(rng: random.Random, dim: int, count: int) -> list[Vector]:
    return [random_vector(rng, dim) for _ in range(count)]


def random_pairs(rng: random.Random, dim: int, count: int) -> list[tuple[Vector, Vector]]:
    return [(random_vector(rng, dim), random_vector(rng, dim)) for _ in range(count)]
