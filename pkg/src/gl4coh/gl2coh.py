"""Cohomology of GL_2(Z) with coefficients L[a,b]: H^0, Eisenstein and cuspidal H^1."""

from __future__ import annotations

from dataclasses import dataclass

from .euler import chi_gl2


@dataclass(frozen=True)
class GL2Cohomology:
    h0: int
    h1_eis: int
    h1_cusp: int

    @property
    def h1(self) -> int:
        return self.h1_eis + self.h1_cusp

    def to_json(self) -> dict:
        return {"h0": self.h0, "h1_eis": self.h1_eis, "h1_cusp": self.h1_cusp}

    def render(self) -> str:
        parts = []
        if self.h0:
            parts.append(f"H^0 = {self.h0}")
        if self.h1:
            terms = []
            if self.h1_eis:
                terms.append(f"Eis {self.h1_eis}")
            if self.h1_cusp:
                terms.append(f"Cusp {self.h1_cusp}")
            parts.append("H^1 = " + " ⊕ ".join(terms))
        return "; ".join(parts) or "0"


def gl2_cohomology(a: int, b: int) -> GL2Cohomology:
    if a < b:
        raise ValueError(f"L[{a},{b}] is not dominant")
    if (a + b) % 2:
        return GL2Cohomology(0, 0, 0)
    if a == b:
        return GL2Cohomology(1 if a % 2 == 0 else 0, 0, 0)
    chi = chi_gl2(a - b, b)
    if a % 2:
        return GL2Cohomology(0, 1, -chi - 1)
    # even/even: H^1 is entirely cuspidal
    return GL2Cohomology(0, 0, -chi)


def cusp_dim_oracle(k: int) -> int:
    """Classical dimension of weight-k cusp forms for SL_2(Z)."""
    if k % 2 or k < 4:
        raise ValueError("weight must be even and >= 4")
    q = k // 12
    return q - 1 if k % 12 == 2 else q


def cusp_dim(k: int) -> int:
    """cusp_dim_oracle extended by 0 to even weights below 4."""
    return 0 if k < 4 else cusp_dim_oracle(k)
