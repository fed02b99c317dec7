"""Permutations, Levi compositions and shuffles (minimal coset representatives)."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __init__(self, images):
        if isinstance(images, str):
            images = [int(c) for c in images]
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"{images} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, rank: int) -> Permutation:
        return cls(range(1, rank + 1))

    @property
    def rank(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composite (self o other)(i) = self(other(i)).

        With the dot-action convention, dot_action(w * u, lam) equals
        dot_action(u, dot_action(w, lam)).
        """
        if other.rank != self.rank:
            raise ValueError("rank mismatch")
        return Permutation(self(other(i)) for i in range(1, self.rank + 1))

    def inverse(self) -> Permutation:
        inv = [0] * self.rank
        for i, wi in enumerate(self.images, start=1):
            inv[wi - 1] = i
        return Permutation(inv)

    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.rank + 1))

    def __str__(self):
        return "".join(str(i) for i in self.images)

    def __repr__(self):
        return f"Permutation('{self}')"


@dataclass(frozen=True)
class Composition:
    """Ordered Levi block sizes, e.g. P_23 of gl_4 is (1,2,1)."""

    blocks: tuple[int, ...]

    def __init__(self, blocks):
        if isinstance(blocks, str):
            blocks = [int(b) for b in blocks.replace("|", ",").split(",") if b]
        blocks = tuple(int(b) for b in blocks)
        if not blocks or any(b <= 0 for b in blocks):
            raise ValueError(f"invalid composition {blocks}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def rank(self) -> int:
        return sum(self.blocks)

    def ranges(self) -> list[range]:
        """Position ranges (1-based) of each block."""
        out, start = [], 1
        for b in self.blocks:
            out.append(range(start, start + b))
            start += b
        return out

    def starts(self) -> list[int]:
        """0-based start offsets of the blocks."""
        out, s = [], 0
        for b in self.blocks:
            out.append(s)
            s += b
        return out

    def cuts(self) -> frozenset[int]:
        """Positions k such that a block boundary lies between k and k+1."""
        out, s = set(), 0
        for b in self.blocks[:-1]:
            s += b
            out.add(s)
        return frozenset(out)

    @classmethod
    def from_cuts(cls, rank: int, cuts) -> Composition:
        pts = [0] + sorted(cuts) + [rank]
        return cls(b - a for a, b in zip(pts, pts[1:]))

    def refines(self, other: Composition) -> bool:
        """True when every block of self lies inside a block of other."""
        return self.rank == other.rank and other.cuts() <= self.cuts()

    def block_of(self, position: int) -> int:
        for idx, r in enumerate(self.ranges()):
            if position in r:
                return idx
        raise ValueError(position)

    def __str__(self):
        return "|".join(str(b) for b in self.blocks)


def length(w: Permutation) -> int:
    """Inversion count."""
    im = w.images
    return sum(1 for i in range(len(im)) for j in range(i + 1, len(im)) if im[i] > im[j])


def is_shuffle(w: Permutation, c: Composition) -> bool:
    """w increases on every block of positions of c."""
    if w.rank != c.rank:
        raise ValueError("rank mismatch")
    return all(w(i) < w(i + 1) for r in c.ranges() for i in list(r)[:-1])


def _sort_key(w: Permutation):
    return (length(w), w.images)


def shuffles(c: Composition) -> list[Permutation]:
    out = [p for p in map(Permutation, permutations(range(1, c.rank + 1))) if is_shuffle(p, c)]
    return sorted(out, key=_sort_key)


def preserves_blocks(u: Permutation, c: Composition) -> bool:
    return all(u(i) in r for r in c.ranges() for i in r)


def factor_shuffle(w: Permutation, v: Permutation, levi: Composition, sub: Composition):
    """Return u with v = w * u, u block-preserving for levi and a shuffle of sub; else None."""
    if not (w.rank == v.rank == levi.rank == sub.rank):
        raise ValueError("rank mismatch")
    u = w.inverse() * v
    if not preserves_blocks(u, levi):
        return None
    if not is_shuffle(u, sub):
        return None
    return u


def transposition(rank: int, i: int) -> Permutation:
    """Simple transposition (i, i+1)."""
    im = list(range(1, rank + 1))
    im[i - 1], im[i] = im[i], im[i - 1]
    return Permutation(im)


def embed(u: Permutation, rank: int, offset: int) -> Permutation:
    """Extend a permutation of a block starting at 0-based offset by the identity."""
    im = list(range(1, rank + 1))
    for i, ui in enumerate(u.images):
        im[offset + i] = offset + ui
    return Permutation(im)
