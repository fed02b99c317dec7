"""Homological Euler characteristics of GL_2(Z), GL_3(Z) and GL_4(Z).

GL_2 uses the closed form by k mod 12. GL_3 goes through the simplified
trace formula: four torsion classes, each weighted by |R(A)| chi(C(A)),
doubled to account for -A. GL_4 is reduced to GL_2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .torsion import KernelFamily, TorsionClass, trace_module
from .weights import SymStd, Weight, minus_identity_sign

DEFAULT_CONSTANTS = {
    "[I2,-1]": Fraction(-1, 12),
    "[T3,1]": Fraction(1, 4),
    "[T6,1]": Fraction(1, 12),
    "[T4,1]": Fraction(1, 4),
    # chi(GL_3(Z)) = 0, so the central classes drop out
    "[1,1,1]": Fraction(0),
    "[-1,-1,-1]": Fraction(0),
}

NONTRIVIAL_GL3_CLASSES = ("[I2,-1]", "[T3,1]", "[T6,1]", "[T4,1]")


@dataclass(frozen=True)
class CentralizerConstantTable:
    """|R(A)| chi(C(A)) for the GL_3(Z) torsion classes the trace formula visits."""

    values: dict = field(default_factory=lambda: dict(DEFAULT_CONSTANTS))

    def __getitem__(self, cls: str) -> Fraction:
        return self.values[cls]

    @classmethod
    def load(cls, path) -> CentralizerConstantTable:
        """Read a JSON object of class -> rational string overrides, e.g. {"[T3,1]": "1/4"}."""
        raw = json.loads(Path(path).read_text())
        values = dict(DEFAULT_CONSTANTS)
        for key, val in raw.items():
            key = str(TorsionClass(key))
            values[key] = Fraction(str(val).replace("−", "-"))
        return cls(values)


@dataclass(frozen=True)
class ChiResult:
    value: Fraction
    breakdown: tuple = ()  # (class, constant, trace, contribution)

    def __int__(self):
        if self.value.denominator != 1:
            raise ValueError(f"non-integral Euler characteristic {self.value}")
        return int(self.value)

    def render(self) -> str:
        lines = [f"{c:>8}  {k!s:>6} * {t:>4} = {v}" for c, k, t, v in self.breakdown]
        lines.append(f"chi_h = 2 * sum = {self.value}")
        return "\n".join(lines)


def chi_gl2(k: int, det: int = 0) -> int:
    """chi_h(GL_2(Z), S^k V_2 (x) det^e), depending on k mod 12 and the parity of e."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k % 2:
        return 0
    q, r = divmod(k, 12)
    if det % 2 == 0:
        return {0: -q + 1, 10: -q - 1}.get(r, -q)
    return {0: -q, 10: -q - 2}.get(r, -q - 1)


def _gl3_weight(mod) -> Weight:
    if isinstance(mod, KernelFamily):
        return mod.weight()
    if isinstance(mod, SymStd) and mod.rank == 3:
        return Weight([mod.k + mod.det, mod.det, mod.det])
    raise TypeError(f"unsupported GL_3 descriptor {mod!r}")


def chi_gl3_detailed(mod, constants: CentralizerConstantTable | None = None) -> ChiResult:
    constants = constants or CentralizerConstantTable()
    if minus_identity_sign(_gl3_weight(mod)) == -1:
        return ChiResult(Fraction(0))
    rows, total = [], Fraction(0)
    for name in NONTRIVIAL_GL3_CLASSES:
        tr = trace_module(TorsionClass(name), mod)
        c = constants[name]
        rows.append((name, c, tr, c * tr))
        total += c * tr
    return ChiResult(2 * total, tuple(rows))


def chi_gl3(mod, constants: CentralizerConstantTable | None = None) -> int:
    return int(chi_gl3_detailed(mod, constants))


def gl3_descriptor(lam: Weight):
    """Trace-formula descriptor for a GL_3 weight of shape [k+e,e,e] or [k+e,1+e,e]."""
    a, b, c = lam
    if b == c:
        return SymStd(3, a - c, c)
    if b == c + 1:
        return KernelFamily(a - c, c)
    raise ValueError(f"no trace descriptor for {lam}")


def chi_gl4(n: int) -> int:
    """chi_h(GL_4(Z), S^{n-4} V_4 (x) det), reduced to GL_2; 0 for odd n."""
    if n % 2:
        return 0
    if n < 4:
        raise ValueError("n must be >= 4")
    return chi_gl2(n - 2, 1)
