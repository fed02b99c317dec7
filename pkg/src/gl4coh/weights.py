"""Weight-lattice arithmetic for gl_m, m <= 4."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

MAX_RANK = 4


@dataclass(frozen=True)
class Weight:
    """Integer weight [a_1, ..., a_m]; a_i is the value on H_i."""

    entries: tuple[int, ...]

    def __init__(self, entries):
        entries = tuple(int(a) for a in entries)
        if not 1 <= len(entries) <= MAX_RANK:
            raise ValueError(f"rank must be in 1..{MAX_RANK}, got {len(entries)}")
        object.__setattr__(self, "entries", entries)

    @property
    def rank(self) -> int:
        return len(self.entries)

    def is_dominant(self) -> bool:
        e = self.entries
        return all(e[i] >= e[i + 1] for i in range(len(e) - 1))

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __add__(self, other: Weight) -> Weight:
        if other.rank != self.rank:
            raise ValueError("rank mismatch")
        return Weight(a + b for a, b in zip(self, other))

    def block(self, start: int, size: int) -> Weight:
        return Weight(self.entries[start:start + size])

    def to_json(self) -> list[int]:
        return list(self.entries)

    def __str__(self):
        return "[" + ",".join(str(a) for a in self.entries) + "]"


@dataclass(frozen=True)
class Rho:
    """Half the sum of positive roots of gl_m, stored doubled so it stays integral."""

    rank: int

    @property
    def doubled_entries(self) -> tuple[int, ...]:
        m = self.rank
        return tuple(m - 1 - 2 * i for i in range(m))

    @property
    def entries(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(d, 2) for d in self.doubled_entries)


@dataclass(frozen=True)
class SymStd:
    """The module S^k V_m (x) det^e."""

    rank: int
    k: int
    det: int = 0

    def __post_init__(self):
        if self.k < 0:
            raise ValueError("symmetric exponent must be >= 0")
        if not 1 <= self.rank <= MAX_RANK:
            raise ValueError("rank out of range")

    def to_json(self) -> dict:
        return {"sym": self.k, "rank": self.rank, "det": self.det}

    @classmethod
    def from_json(cls, data: dict) -> SymStd:
        return cls(rank=data["rank"], k=data["sym"], det=data.get("det", 0))


def module_to_weight(mod: SymStd) -> Weight:
    """S^k V_m (x) det^e  ->  [k+e, e, ..., e]."""
    return Weight([mod.k + mod.det] + [mod.det] * (mod.rank - 1))


def weight_to_module(lam: Weight) -> SymStd:
    """Inverse of module_to_weight; only weights of the shape [k+e, e, ..., e] qualify."""
    e = lam[-1]
    if any(a != e for a in lam.entries[1:]) or lam[0] < e:
        raise ValueError(f"{lam} is not the highest weight of S^k V (x) det^e")
    return SymStd(rank=lam.rank, k=lam[0] - e, det=e)


def _images(w):
    # accepts Permutation or any sequence of 1-based images
    return tuple(getattr(w, "images", w))


def dot_action(w, lam: Weight) -> Weight:
    """w . lam = w(lam + rho) - rho with (w mu)_i = mu_{w(i)}."""
    images = _images(w)
    if len(images) != lam.rank:
        raise ValueError(f"rank mismatch: permutation of {len(images)} vs weight of rank {lam.rank}")
    two_rho = Rho(lam.rank).doubled_entries
    shifted = [2 * a + r for a, r in zip(lam, two_rho)]
    moved = [shifted[images[i] - 1] for i in range(lam.rank)]
    return Weight((x - r) // 2 for x, r in zip(moved, two_rho))


def weyl_dimension(lam: Weight) -> int:
    """Dimension of the irreducible gl_m module of highest weight lam."""
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    m = lam.rank
    num = prod(lam[i] - lam[j] + j - i for i in range(m) for j in range(i + 1, m))
    den = prod(j - i for i in range(m) for j in range(i + 1, m))
    return num // den


def minus_identity_sign(lam: Weight) -> int:
    """Scalar by which -I acts; -1 kills all GL_m(Z) cohomology."""
    return -1 if sum(lam) % 2 else 1
