"""Named consistency checks shared by the `verify` command and the test-suite.

Each check returns a CheckResult; none of them raises on a mathematical
mismatch, so a full sweep always reports every outcome.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from importlib import resources
from math import comb, factorial, prod
from pathlib import Path

from .arithcoh import (AxiomViolation, GL3_FAMILIES, _SIDES, _LEADING, all_compositions, central_character_eval,
                       gl3_cohomology, gl3_family_weight, parabolic_cohomology)
from .boundary import (ValidationMismatch, boundary_cohomology, expected_boundary_dim, gl4_cohomology, gl4_weight,
                       theorem_dim)
from .euler import chi_gl2, chi_gl3, chi_gl3_detailed, chi_gl4, gl3_descriptor
from .gl2coh import cusp_dim, cusp_dim_oracle, gl2_cohomology
from .kostant import kostant_decompose, nilradical_dim
from .render import GL4_COMPOSITIONS, nilradical_display, parabolic_display, weyl_table_rows
from .torsion import IntPolynomial, KernelFamily, TorsionClass, resultant, trace_module, trace_sym_power
from .weights import SymStd, Weight, dot_action, minus_identity_sign, weyl_dimension
from .weyl import Composition, Permutation, length, preserves_blocks, shuffles

# Residue tables of the two trace lemmas: class -> (period, values by residue).
SYM_TRACE_LEMMA = {
    "[T3,1]": (3, (1, 0, 0)),
    "[T6,1]": (6, (1, 2, 2, 1, 0, 0)),
    "[T4,1]": (4, (1, 1, 0, 0)),
}
KERNEL_TRACE_LEMMA = {
    "[I2,-1]": (2, (-1, 0)),
    "[T3,1]": (3, (-1, 0, 0)),
    "[T6,1]": (6, (-1, 0, 2, 3, 2, 0)),
    "[T4,1]": (4, (-1, 0, 1, 0)),
}
# chi_h(GL_3(Z), L[12m+r,1,0]) for r = -1, 1, 3, 5, 7, 9
WORKED_CHI = ((-1, -1), (1, 1), (3, 0), (5, 0), (7, 0), (9, 1))


@dataclass(frozen=True)
class CheckResult:
    module: str
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'}  {self.module}: {self.name}" + (f"  ({self.detail})" if self.detail else "")


def _check(module, name, failures) -> CheckResult:
    failures = list(failures)
    return CheckResult(module, name, not failures, "; ".join(map(str, failures[:3])))


def fixtures_dir(path=None) -> Path:
    if path is not None:
        return Path(path)
    return Path(str(resources.files("gl4coh") / "fixtures"))


# --- weights / weyl -------------------------------------------------------------

def check_dot_composite(rng: random.Random, trials: int = 200) -> CheckResult:
    bad = []
    for _ in range(trials):
        m = rng.randint(1, 4)
        lam = Weight(sorted((rng.randint(-9, 9) for _ in range(m)), reverse=True))
        w = Permutation(rng.sample(range(1, m + 1), m))
        v = Permutation(rng.sample(range(1, m + 1), m))
        if dot_action(w, dot_action(v, lam)) != dot_action(v * w, lam):
            bad.append((w, v, lam))
    return _check("weights", "dot action composes as (v*w)", bad)


def check_orbit_distinct(rng: random.Random, trials: int = 100) -> CheckResult:
    bad = []
    for _ in range(trials):
        m = rng.randint(1, 4)
        lam = Weight(sorted((rng.randint(-9, 9) for _ in range(m)), reverse=True))
        orbit = {dot_action(w, lam) for w in map(Permutation, itertools.permutations(range(1, m + 1)))}
        if len(orbit) != factorial(m):
            bad.append(lam)
    return _check("weights", "dot orbit of a dominant weight is regular", bad)


def check_weyl_dimension_sym() -> CheckResult:
    bad = []
    for m in range(1, 5):
        for k in range(31):
            for e in (-2, 0, 3):
                lam = Weight([k + e] + [e] * (m - 1))
                if weyl_dimension(lam) != comb(k + m - 1, m - 1):
                    bad.append(lam)
    return _check("weights", "weyl_dimension of S^k equals a binomial", bad)


def _gaussian_multinomial(blocks) -> list[int]:
    """Coefficients of [m]_q! / prod [b]_q!, by brute force over all permutations' inversion counts."""
    m = sum(blocks)
    full = [0] * (comb(m, 2) + 1)
    for p in itertools.permutations(range(m)):
        full[sum(1 for i in range(m) for j in range(i + 1, m) if p[i] > p[j])] += 1
    sub = [1]
    for b in blocks:
        fac = [0] * (comb(b, 2) + 1)
        for p in itertools.permutations(range(b)):
            fac[sum(1 for i in range(b) for j in range(i + 1, b) if p[i] > p[j])] += 1
        sub = [sum(sub[i] * fac[k - i] for i in range(len(sub)) if 0 <= k - i < len(fac))
               for k in range(len(sub) + len(fac) - 1)]
    # polynomial division full / sub
    quot = [0] * (len(full) - len(sub) + 1)
    rem = list(full)
    for k in range(len(quot) - 1, -1, -1):
        quot[k] = rem[k + len(sub) - 1] // sub[-1]
        for i, c in enumerate(sub):
            rem[k + i] -= quot[k] * c
    assert not any(rem)
    return quot


def check_shuffles() -> CheckResult:
    bad = []
    for m in range(1, 5):
        for c in all_compositions(m):
            sh = shuffles(c)
            if len(sh) * prod(factorial(b) for b in c.blocks) != factorial(m):
                bad.append(("count", c))
            gen = [0] * (nilradical_dim(c) + 1)
            for w in sh:
                gen[length(w)] += 1
            if gen != _gaussian_multinomial(c.blocks):
                bad.append(("gaussian", c))
            perms = list(map(Permutation, itertools.permutations(range(1, m + 1))))
            levi = [s for s in perms if preserves_blocks(s, c) and not s.is_identity()]
            for w in sh:
                if any(length(w * s) <= length(w) for s in levi):
                    bad.append(("minimal", c, w))
    return _check("weyl", "shuffle count, Gaussian multinomial and coset minimality", bad)


# --- kostant --------------------------------------------------------------------

def check_kostant_alternating(rng: random.Random, per_composition: int = 100) -> CheckResult:
    bad = []
    for m in (2, 3, 4):
        for c in all_compositions(m):
            if nilradical_dim(c) == 0:
                continue
            for _ in range(per_composition):
                lam = Weight(sorted((rng.randint(-12, 12) for _ in range(m)), reverse=True))
                dec = kostant_decompose(c, lam)
                total = sum((-1) ** s.degree * prod(weyl_dimension(b) for b in s.block_weights()) for s in dec.summands)
                if total or max(s.degree for s in dec.summands) != nilradical_dim(c):
                    bad.append((c, lam))
    return _check("kostant", "Koszul alternating dimension vanishes; top degree = dim N", bad)


def check_golden(name: str, produced: str, fixtures=None) -> CheckResult:
    path = fixtures_dir(fixtures) / name
    if not path.is_file():
        return CheckResult("fixtures", name, False, f"missing {path}")
    expected = path.read_text(encoding="utf-8")
    return CheckResult("fixtures", name, produced == expected, "" if produced == expected else f"differs from {path}")


def golden_texts() -> dict[str, str]:
    comps = [GL4_COMPOSITIONS[k] for k in ("P12", "P23", "P34", "P13", "P12,34", "P24")]
    return {
        "weyl_table.txt": "".join(r + "\n" for r in weyl_table_rows()),
        "nilradical.txt": "\n".join(nilradical_display(c) for c in comps),
        "parabolic.txt": "\n".join(parabolic_display(GL4_COMPOSITIONS[k]) for k in
                                   ("B", "P12", "P23", "P34", "P13", "P12,34", "P24")),
    }


# --- torsion / euler ---------------------------------------------------------------

# classes whose eigenvalues are pairwise distinct, so 1/det(1 - tA) has simple poles only
PERIODIC_CLASSES = ("[T3,1]", "[T6,1]", "[T4,1]", "[T3,-1]", "[T4]", "[T6]", "[T3,T4]", "[T6,-1,1]", "[T4,1,-1]")
IDENTITY_CLASSES = ("[1]", "[I2]", "[I2,1]", "[I2,I2]")


def _order(a: TorsionClass) -> int:
    m = a.matrix()
    cur = m
    for d in range(1, 13):
        if all(cur[i][j] == int(i == j) for i in range(len(m)) for j in range(len(m))):
            return d
        cur = [[sum(cur[i][k] * m[k][j] for k in range(len(m))) for j in range(len(m))] for i in range(len(m))]
    raise ValueError(f"{a} has order > 12")


def check_trace_periodicity(k_max: int = 200) -> CheckResult:
    bad = []
    for name in PERIODIC_CLASSES:
        a = TorsionClass(name)
        d = _order(a)
        h = [trace_sym_power(a, k) for k in range(k_max + 1)]
        bad += [(name, k) for k in range(k_max + 1) if h[k] != h[k % d]]
    return _check("torsion", "Tr(A|S^k) periodic with period = order of A", bad)


def check_identity_trace() -> CheckResult:
    bad = []
    for name in IDENTITY_CLASSES:
        a = TorsionClass(name)
        for k in range(31):
            if trace_sym_power(a, k) != weyl_dimension(Weight([k] + [0] * (a.rank - 1))):
                bad.append((name, k))
    return _check("torsion", "Tr(I|S^k) = weyl_dimension", bad)


def check_trace_lemmas(periods: int = 3) -> CheckResult:
    bad = []
    a = TorsionClass("[I2,-1]")
    for n in range(periods):
        for k in (0, 1):
            if trace_module(a, SymStd(3, 2 * n + k)) != n + 1:
                bad.append(("S", "[I2,-1]", n, k))
    for name, (period, values) in SYM_TRACE_LEMMA.items():
        for n in range(periods):
            for k, v in enumerate(values):
                if trace_module(TorsionClass(name), SymStd(3, period * n + k)) != v:
                    bad.append(("S", name, n, k))
    for name, (period, values) in KERNEL_TRACE_LEMMA.items():
        for n in range(1, periods + 1):
            for k, v in enumerate(values):
                if trace_module(TorsionClass(name), KernelFamily(period * n - 1 + k)) != v:
                    bad.append(("L", name, n, k))
    return _check("torsion", "trace lemma residue tables", bad)


def check_resultant_symmetry(rng: random.Random, trials: int = 100) -> CheckResult:
    bad = []
    for _ in range(trials):
        f = IntPolynomial([rng.randint(-5, 5) for _ in range(rng.randint(1, 4))] + [1])
        g = IntPolynomial([rng.randint(-5, 5) for _ in range(rng.randint(1, 4))] + [1])
        if resultant(f, g) != (-1) ** (f.degree * g.degree) * resultant(g, f):
            bad.append((f.coefficients, g.coefficients))
    return _check("torsion", "resultant antisymmetry", bad)


def check_worked_chi() -> CheckResult:
    bad = [(r, m) for r, v in WORKED_CHI for m in range(1, 4) if chi_gl3(KernelFamily(12 * m + r)) != v]
    return _check("euler", "worked values of chi_h(GL_3, L[12m+r,1,0])", bad)


def check_gl2_euler_table(k_max: int = 240) -> CheckResult:
    bad = []
    for k in range(k_max + 1):
        n, r = divmod(k, 12)
        plain = 0 if r % 2 else {0: -n + 1, 10: -n - 1}.get(r, -n)
        twisted = 0 if r % 2 else {0: -n, 10: -n - 2}.get(r, -n - 1)
        if chi_gl2(k) != plain or chi_gl2(k, 1) != twisted:
            bad.append(k)
    return _check("euler", "GL_2 Euler characteristic tables", bad)


def check_gl3_euler_identity(part: str, n_max: int = 300) -> CheckResult:
    bad = []
    for n in range(6, n_max + 1, 2):
        if part == "a":
            lhs, rhs = chi_gl3(KernelFamily(n - 3)), chi_gl2(n - 4) - chi_gl2(n - 2)
        elif part == "b":
            lhs, rhs = chi_gl3(SymStd(3, n - 3, 1)), chi_gl2(n - 2, 1)
        else:
            lhs, rhs = chi_gl3(SymStd(3, n - 4)), chi_gl2(n - 4)
        if lhs != rhs:
            bad.append(f"n={n}: {lhs} != {rhs}")
    return _check("euler", f"GL_3 Euler identity ({part})", bad)


def check_minus_identity_chi() -> CheckResult:
    bad = []
    for k in range(40):
        for e in (1, 3):
            mod = SymStd(3, k, e) if (k + 3 * e) % 2 else None
            if mod and chi_gl3(mod) != 0:
                bad.append(mod)
        if (k + 1) % 2 and chi_gl3(KernelFamily(k)) != 0:
            bad.append(KernelFamily(k))
    return _check("euler", "chi vanishes when -I acts by -1", bad)


# --- gl2coh ----------------------------------------------------------------------------

def check_gl2(k_max: int = 300) -> CheckResult:
    bad = []
    for d in range(2, k_max + 1, 2):
        for b in (-3, -1, 1, 2, 0, 4):
            h = gl2_cohomology(d + b, b)
            if h.h1_cusp != cusp_dim(d + 2):
                bad.append(((d + b, b), h))
            if b % 2 and h.h1_eis != 1:
                bad.append(((d + b, b), "eis"))
    for a in range(-6, 7):
        if gl2_cohomology(a, a).h0 != (1 if a % 2 == 0 else 0):
            bad.append((a, a))
    return _check("gl2coh", "cusp dims match the classical formula; H^0 only for trivial modules", bad)


# --- arithcoh ----------------------------------------------------------------------------

def levi_euler(w: Weight) -> int:
    """chi_h of a single Levi factor, from the trace formula / closed forms."""
    if minus_identity_sign(w) == -1:
        return 0
    if w.rank == 1:
        return 1
    if w.rank == 2:
        return chi_gl2(w[0] - w[1], w[1])
    return chi_gl3(gl3_descriptor(_twist_gl3(w)))


def _twist_gl3(w: Weight) -> Weight:
    t = w[2] - w[2] % 2
    return Weight([x - t for x in w])


def check_parabolic_euler(n_min: int = 6, n_max: int = 100) -> CheckResult:
    bad = []
    for n in range(n_min, n_max + 1, 2):
        lam = gl4_weight(n)
        for name, c in GL4_COMPOSITIONS.items():
            h = parabolic_cohomology(c, lam)
            expected = sum((-1) ** s.degree * prod(levi_euler(b) for b in s.block_weights())
                           for s in kostant_decompose(c, lam).summands)
            if h.euler() != expected:
                bad.append((n, name, h.euler(), expected))
    return _check("arithcoh", "parabolic chi = sum of Kostant terms times Levi chi", bad)


def check_gl3_euler(n_max: int = 200) -> CheckResult:
    bad = []
    for fam in GL3_FAMILIES:
        for n in range(6, n_max + 1, 2):
            lam = gl3_family_weight(fam, n)
            try:
                h = gl3_cohomology(fam, n)
            except AxiomViolation as exc:
                bad.append((fam, n, str(exc)))
                continue
            if h.euler() != chi_gl3(gl3_descriptor(lam)):
                bad.append((fam, n))
    return _check("arithcoh", "GL_3 answers satisfy the Euler constraint", bad)


def check_eisenstein_selection(n_max: int = 200) -> CheckResult:
    bad = []
    for fam in _SIDES:
        for n in range(6, n_max + 1, 2):
            lam = gl3_family_weight(fam, n)
            c12 = central_character_eval("P12", dot_action(Permutation(_LEADING["P12"]), lam))
            c23 = central_character_eval("P23", dot_action(Permutation(_LEADING["P23"]), lam))
            leading = gl3_cohomology(fam, n, check=False).by_degree[2][0]
            if not (c12 > c23 and leading.inner == ("P12",)):
                bad.append((fam, n, c12, c23))
    return _check("arithcoh", "retained Eisenstein summand has the larger central character", bad)


# --- boundary ------------------------------------------------------------------------

def check_boundary(n_max: int = 200, n_min: int = 4) -> list[CheckResult]:
    euler_bad, conc_bad, dim_bad, ghost_bad = [], [], [], []
    for n in range(n_min, n_max + 1, 2):
        b = boundary_cohomology(n)
        sheet = b.page.sheet
        for q in sheet.degrees():
            e1 = sum((-1) ** p * sheet.e1_dim(p, q) for p in range(len(sheet.columns)))
            e2 = sum((-1) ** p * b.page.dim(p, q) for p in range(len(sheet.columns)))
            if e1 != e2:
                euler_bad.append((n, q))
        dims = b.dims()
        if set(dims) != {3}:
            conc_bad.append(f"n={n}: {dims}")
        if dims.get(3, 0) != expected_boundary_dim(n):
            dim_bad.append(f"n={n}: {dims.get(3, 0)}")
        if b.ghost_dim != cusp_dim(n - 2):
            ghost_bad.append(n)
    return [
        _check("boundary", "per-row Euler invariance E1 -> E2 (d o d = 0 checked in compute_e2)", euler_bad),
        _check("boundary", "boundary cohomology concentrated in degree 3", conc_bad),
        _check("boundary", "dim H^3 of the boundary = 1 + dim S_n + dim S_{n-2}", dim_bad),
        _check("boundary", "ghost dimension = dim S_{n-2}", ghost_bad),
    ]


def check_gl4(n_max: int = 400) -> CheckResult:
    bad = []
    for n in range(4, n_max + 1):
        try:
            h = gl4_cohomology(n)
        except ValidationMismatch as exc:
            bad.append(str(exc))
            continue
        d = h.dim(3)
        if d != theorem_dim(n - 4) or (n % 2 == 0 and d != -chi_gl4(n)):
            bad.append(n)
        if n % 2 == 0 and d != 1 + gl2_cohomology(n - 3, -1).h1_cusp:
            bad.append(("cusp", n))
    return _check("boundary", "dim H^3(GL_4) = -chi = closed form", bad)


def run_all(n_max: int = 200, fixtures=None, seed: int = 0) -> list[CheckResult]:
    rng = random.Random(seed)
    out = [
        check_dot_composite(rng), check_orbit_distinct(rng), check_weyl_dimension_sym(),
        check_shuffles(), check_kostant_alternating(rng),
        check_trace_periodicity(), check_identity_trace(), check_trace_lemmas(), check_resultant_symmetry(rng),
        check_worked_chi(), check_gl2_euler_table(), *(check_gl3_euler_identity(p) for p in "abc"), check_minus_identity_chi(),
        check_gl2(),
        check_parabolic_euler(n_max=min(n_max, 100)), check_gl3_euler(n_max), check_eisenstein_selection(n_max),
        *check_boundary(n_max), check_gl4(2 * n_max),
    ]
    for name, text in golden_texts().items():
        out.append(check_golden(name, text, fixtures))
    return out
