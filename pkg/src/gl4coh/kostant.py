"""Kostant's decomposition of H^i(N_P, L_lambda) into Levi highest weights."""

from __future__ import annotations

from dataclasses import dataclass

from .weights import Weight, dot_action
from .weyl import Composition, Permutation, length, shuffles


@dataclass(frozen=True)
class KostantSummand:
    degree: int
    shuffle: Permutation
    levi_weight: Weight
    levi_blocks: Composition

    def block_weights(self) -> list[Weight]:
        return [self.levi_weight.block(s, b) for s, b in zip(self.levi_blocks.starts(), self.levi_blocks.blocks)]

    def row(self) -> str:
        return f"{self.shuffle} : {self.degree} : {self.levi_weight}"


@dataclass(frozen=True)
class KostantDecomposition:
    parabolic: Composition
    lam: Weight
    summands: tuple[KostantSummand, ...]

    def by_degree(self) -> dict[int, list[KostantSummand]]:
        out: dict[int, list[KostantSummand]] = {}
        for s in self.summands:
            out.setdefault(s.degree, []).append(s)
        return out

    def rows(self) -> list[str]:
        return [s.row() for s in self.summands]


def nilradical_dim(parabolic: Composition) -> int:
    b = parabolic.blocks
    return sum(b[i] * b[j] for i in range(len(b)) for j in range(i + 1, len(b)))


def kostant_decompose(parabolic: Composition, lam: Weight) -> KostantDecomposition:
    if lam.rank != parabolic.rank:
        raise ValueError("rank mismatch")
    if not lam.is_dominant():
        raise ValueError(f"{lam} is not dominant")
    summands = []
    for w in shuffles(parabolic):
        mu = dot_action(w, lam)
        s = KostantSummand(length(w), w, mu, parabolic)
        assert all(b.is_dominant() for b in s.block_weights()), s
        summands.append(s)
    return KostantDecomposition(parabolic, lam, tuple(summands))
