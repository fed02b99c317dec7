"""Torsion block matrices, characteristic polynomials, resultants and exact traces.

Traces on symmetric powers go through integer power sums p_k = Tr(A^k) and
the recurrence k h_k = sum_{i=1..k} p_i h_{k-i}, so no cyclotomic arithmetic
is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .weights import Weight


class TorsionBlock(Enum):
    P1 = "1"
    M1 = "-1"
    I2 = "I2"
    MI2 = "-I2"
    T3 = "T3"
    T4 = "T4"
    T6 = "T6"
    MT3 = "-T3"
    MT4 = "-T4"
    MT6 = "-T6"

    @property
    def matrix(self) -> tuple[tuple[int, ...], ...]:
        return _MATRICES[self]

    @property
    def size(self) -> int:
        return len(self.matrix)

    def charpoly(self) -> IntPolynomial:
        m = self.matrix
        if len(m) == 1:
            return IntPolynomial((-m[0][0], 1))
        tr = m[0][0] + m[1][1]
        det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
        return IntPolynomial((det, -tr, 1))

    def __str__(self):
        return self.value


def _neg(m):
    return tuple(tuple(-x for x in row) for row in m)


_T3 = ((0, 1), (-1, -1))
_T4 = ((0, 1), (-1, 0))
_T6 = ((0, -1), (1, 1))
_MATRICES = {
    TorsionBlock.P1: ((1,),),
    TorsionBlock.M1: ((-1,),),
    TorsionBlock.I2: ((1, 0), (0, 1)),
    TorsionBlock.MI2: ((-1, 0), (0, -1)),
    TorsionBlock.T3: _T3,
    TorsionBlock.T4: _T4,
    TorsionBlock.T6: _T6,
    TorsionBlock.MT3: _neg(_T3),
    TorsionBlock.MT4: _neg(_T4),
    TorsionBlock.MT6: _neg(_T6),
}

_BY_NAME = {b.value: b for b in TorsionBlock} | {b.name: b for b in TorsionBlock}


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients from low to high degree."""

    coefficients: tuple[int, ...]

    def __init__(self, coefficients):
        c = list(int(x) for x in coefficients)
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c or [0]))

    @property
    def degree(self) -> int:
        if self.coefficients == (0,):
            return -1
        return len(self.coefficients) - 1

    def is_monic(self) -> bool:
        return self.coefficients[-1] == 1

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        out = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                out[i + j] += a * b
        return IntPolynomial(out)

    def __pow__(self, k: int) -> IntPolynomial:
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x):
        return sum(c * x**i for i, c in enumerate(self.coefficients))


def _det(rows) -> int:
    """Exact determinant by fraction elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    assert det.denominator == 1
    return int(det)


def sylvester_matrix(f: IntPolynomial, g: IntPolynomial) -> list[list[int]]:
    m, n = f.degree, g.degree
    fc, gc = f.coefficients[::-1], g.coefficients[::-1]
    size = m + n
    rows = []
    for i in range(n):
        rows.append([0] * i + list(fc) + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + list(gc) + [0] * (size - n - 1 - i))
    return rows


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """prod_{i,j} (alpha_i - beta_j) for monic f, g, as a Sylvester determinant."""
    if not (f.is_monic() and g.is_monic()):
        raise ValueError("resultant expects monic polynomials")
    if f.degree < 1 or g.degree < 1:
        raise ValueError("resultant expects nonconstant polynomials")
    return _det(sylvester_matrix(f, g))


@dataclass(frozen=True)
class TorsionClass:
    blocks: tuple[TorsionBlock, ...]

    def __init__(self, blocks):
        if isinstance(blocks, str):
            blocks = parse_blocks(blocks)
        blocks = tuple(b if isinstance(b, TorsionBlock) else _BY_NAME[str(b)] for b in blocks)
        object.__setattr__(self, "blocks", blocks)
        if self.rank > 4:
            raise ValueError("torsion classes have rank <= 4")

    @property
    def rank(self) -> int:
        return sum(b.size for b in self.blocks)

    def matrix(self) -> list[list[int]]:
        n = self.rank
        out = [[0] * n for _ in range(n)]
        off = 0
        for b in self.blocks:
            for i, row in enumerate(b.matrix):
                for j, x in enumerate(row):
                    out[off + i][off + j] = x
            off += b.size
        return out

    def det(self) -> int:
        return _det(self.matrix())

    def __neg__(self) -> TorsionClass:
        flip = {TorsionBlock.P1: TorsionBlock.M1, TorsionBlock.I2: TorsionBlock.MI2,
                TorsionBlock.T3: TorsionBlock.MT3, TorsionBlock.T4: TorsionBlock.MT4,
                TorsionBlock.T6: TorsionBlock.MT6}
        flip |= {v: k for k, v in flip.items()}
        return TorsionClass(flip[b] for b in self.blocks)

    def __str__(self):
        return "[" + ",".join(str(b) for b in self.blocks) + "]"


def parse_blocks(text: str) -> list[TorsionBlock]:
    body = text.strip().strip("[]")
    return [_BY_NAME[tok.strip()] for tok in body.split(",") if tok.strip()]


def resultant_factor(a: TorsionClass) -> int:
    """|R(A)| = |prod_{i<j} R(f_i, f_j)| over the block characteristic polynomials."""
    polys = [b.charpoly() for b in a.blocks]
    out = 1
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            r = resultant(polys[i], polys[j])
            if r == 0:
                raise ValueError(f"blocks {a.blocks[i]} and {a.blocks[j]} have non-coprime characteristic polynomials")
            out *= r
    return abs(out)


def _matmul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def power_traces(a: TorsionClass, up_to: int) -> list[int]:
    """[Tr(A), Tr(A^2), ..., Tr(A^up_to)]."""
    if up_to < 1:
        raise ValueError("up_to must be >= 1")
    m = a.matrix()
    cur = m
    out = []
    for _ in range(up_to):
        out.append(sum(cur[i][i] for i in range(len(cur))))
        cur = _matmul(cur, m)
    return out


def sym_power_traces(a: TorsionClass, k_max: int) -> list[int]:
    """[h_0, ..., h_kmax] with h_k = Tr(A | S^k V)."""
    p = power_traces(a, max(k_max, 1))
    h = [1]
    for k in range(1, k_max + 1):
        s = sum(p[i - 1] * h[k - i] for i in range(1, k + 1))
        assert s % k == 0
        h.append(s // k)
    return h


def trace_sym_power(a: TorsionClass, k: int) -> int:
    if k < 0:
        raise ValueError("k must be >= 0")
    return sym_power_traces(a, k)[k]


@dataclass(frozen=True)
class KernelFamily:
    """L[k,1,0] (x) det^e on gl_3, presented as ker(S^k V_3 (x) V_3 -> S^{k+1} V_3)."""

    k: int
    det: int = 0

    def weight(self) -> Weight:
        return Weight([self.k + self.det, 1 + self.det, self.det])


def trace_module(a: TorsionClass, mod) -> int:
    """Trace of A on S^k V_m (x) det^e or on a KernelFamily."""
    from .weights import SymStd

    if isinstance(mod, SymStd):
        if mod.rank != a.rank:
            raise ValueError("rank mismatch")
        # det(A) = +-1, so det^e only depends on the parity of e
        return a.det() ** abs(mod.det) * trace_sym_power(a, mod.k)
    if isinstance(mod, KernelFamily):
        if a.rank != 3:
            raise ValueError("kernel family lives on gl_3")
        h = sym_power_traces(a, mod.k + 1)
        p1 = power_traces(a, 1)[0]
        return a.det() ** abs(mod.det) * (h[mod.k] * p1 - h[mod.k + 1])
    raise TypeError(f"unsupported descriptor {mod!r}")
