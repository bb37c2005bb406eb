"""Deriving asymmetric quantum codes and subsystem codes from cyclic pairs.

The core construction takes nested classical codes (the dual of the Z-side
code inside the X-side code) and produces an asymmetric CSS code whose two
distances are minima over codeword set differences. Two extension routes
build the partner code from a single starting code: multiplying its
generator by a divisor of the parity polynomial, or removing a coset block
from the dual's defining set. Both routes assert the ground-truth logical
dimension (the block size b) and attach a note recomputing the commonly
stated closed forms 2k-b-n / 2k+b-n, which disagree with it.

Logical dimension is always computed from actual defining-set sizes, three
independent ways; disagreement raises InternalConsistencyError rather than
propagating a wrong parameter.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Sequence

from .cyclic import (
    CheckMatrix,
    CyclicCode,
    DefiningSet,
    from_defining_set,
    intersect,
    parity_check_matrix,
    product_is_zero,
)
from .errors import BudgetExceeded, InternalConsistencyError, NotNested
from .galois import FieldElement, nth_root_field, subfield_embedding
from .polyring import Polynomial, render_poly
from .weights import (
    DEFAULT_BUDGET,
    WeightReport,
    bound_only_report,
    min_weight,
    min_weight_difference,
)

#: purity is evaluated by default only up to this length (extra enumerations)
PURITY_AUTO_LIMIT = 31


def _render_pair(dz: WeightReport, dx: WeightReport) -> str:
    return f"{dz.render()}/{dx.render()}"


@dataclass(frozen=True)
class AqecParams:
    """A derived asymmetric quantum code [[n, k, dz/dx]]_q with provenance."""

    n: int
    q: int
    k: int
    dz: WeightReport
    dx: WeightReport
    pure: bool | None
    c1: CyclicCode
    c2: CyclicCode
    route: str
    notes: tuple[str, ...] = ()

    def label(self) -> str:
        return f"[[{self.n},{self.k},{_render_pair(self.dz, self.dx)}]]_{self.q}"

    def as_dict(self) -> dict:
        out = {
            "n": self.n,
            "q": self.q,
            "k": self.k,
            "dz": self.dz.as_dict(),
            "dx": self.dx.as_dict(),
            "c1": self.c1.descriptor(),
            "c2": self.c2.descriptor(),
            "route": self.route,
        }
        if self.pure is not None:
            out["pure"] = self.pure
        if self.notes:
            out["notes"] = list(self.notes)
        return out


@dataclass(frozen=True)
class SubsystemParams:
    """A derived asymmetric subsystem code [[n, k, r, dz/dx]]_q."""

    n: int
    q: int
    k: int
    r: int
    dz: WeightReport
    dx: WeightReport
    pure: bool | None
    c1: CyclicCode
    c2: CyclicCode
    route: str
    notes: tuple[str, ...] = ()

    def label(self) -> str:
        return f"[[{self.n},{self.k},{self.r},{_render_pair(self.dz, self.dx)}]]_{self.q}"

    def as_dict(self) -> dict:
        out = {
            "n": self.n,
            "q": self.q,
            "k": self.k,
            "r": self.r,
            "dz": self.dz.as_dict(),
            "dx": self.dx.as_dict(),
            "c1": self.c1.descriptor(),
            "c2": self.c2.descriptor(),
            "route": self.route,
        }
        if self.pure is not None:
            out["pure"] = self.pure
        if self.notes:
            out["notes"] = list(self.notes)
        return out


@dataclass(frozen=True)
class CorrectionCapability:
    """Guaranteed error-correction radii; exact=False when distances are bounds."""

    t_x: int
    t_z: int
    exact: bool


# ---------------------------------------------------------------------------
# CSS derivation
# ---------------------------------------------------------------------------

def _difference_side(outer: CyclicCode, inner: CyclicCode, budget: int,
                     workers: int) -> WeightReport:
    try:
        return min_weight_difference(outer, inner, budget, workers=workers)
    except BudgetExceeded:
        return bound_only_report(outer, budget)


def _evaluate_purity(side1: WeightReport, side2: WeightReport,
                     c1: CyclicCode, c2: CyclicCode, budget: int,
                     workers: int) -> bool | None:
    if not (side1.is_exact and side2.is_exact):
        return None
    try:
        d1 = min_weight(c1, budget, workers=workers)
        d2 = min_weight(c2, budget, workers=workers)
    except BudgetExceeded:
        return None
    return side1.value == d1.value and side2.value == d2.value


def css_aqec(c1: CyclicCode, c2: CyclicCode, budget: int = DEFAULT_BUDGET, *,
             purity: bool | None = None, workers: int = 1) -> AqecParams:
    """Asymmetric CSS code from a nested pair: requires dual(C2) inside C1.

    k is computed from the actual dimensions (three ways, which must agree).
    dx/dz are the min/max of the two set-difference weights when both are
    exact; if a side exceeds the budget it degrades to its consecutive-root
    bound, flagged bound-only, with the C1 side reported as dx and the C2
    side as dz. Purity is evaluated by default only for n <= 31.
    """
    if (c1.n, c1.q) != (c2.n, c2.q):
        raise ValueError(
            f"mismatched codes: (n={c1.n}, q={c1.q}) vs (n={c2.n}, q={c2.q})"
        )
    c2perp = c2.dual()
    if not c1.contains(c2perp):
        raise NotNested(
            f"dual of {c2.descriptor()} is not contained in {c1.descriptor()}"
        )
    n, q = c1.n, c1.q
    k = c1.k + c2.k - n
    k_dims = c1.k - c2perp.k
    k_sets = len(c2perp.T.members) - len(c1.T.members)
    if not (k == k_dims == k_sets):
        raise InternalConsistencyError(
            f"dimension routes disagree: k1+k2-n={k}, dim difference={k_dims}, "
            f"set difference={k_sets}"
        )
    c1perp = c1.dual()
    side1 = _difference_side(c1, c2perp, budget, workers)  # X-side weight
    side2 = _difference_side(c2, c1perp, budget, workers)  # Z-side weight
    if side1.is_exact and side2.is_exact:
        dx, dz = sorted((side1, side2), key=lambda r: r.value)
    else:
        dx, dz = side1, side2
    want_purity = purity if purity is not None else n <= PURITY_AUTO_LIMIT
    pure = (
        _evaluate_purity(side1, side2, c1, c2, budget, workers)
        if want_purity
        else None
    )
    notes = ()
    if dx.is_exact:
        notes = (f"symmetric stabilizer corollary [[{n},{k},{dx.value}]]_{q}",)
    return AqecParams(n, q, k, dz, dx, pure, c1, c2, "css", notes)


def build_stabilizer_matrix(c1: CyclicCode, c2: CyclicCode) -> tuple[CheckMatrix, CheckMatrix]:
    """(H_x, H_z) block pair: the parity matrices of C1 and C2.

    Valid only for a nested pair; the blocks are verified to commute.
    """
    c2perp = c2.dual()
    if not c1.contains(c2perp):
        raise NotNested(
            f"dual of {c2.descriptor()} is not contained in {c1.descriptor()}"
        )
    hx = parity_check_matrix(c1)
    hz = parity_check_matrix(c2)
    if not check_css_commutativity(hx, hz):
        raise InternalConsistencyError("stabilizer blocks of a nested pair must commute")
    return hx, hz


def check_css_commutativity(h1: CheckMatrix, h2: CheckMatrix) -> bool:
    """True iff H1 . H2^T = 0 (over GF(q) this is the full commutation test)."""
    return product_is_zero(h1, h2)


# ---------------------------------------------------------------------------
# The two extension constructions
# ---------------------------------------------------------------------------

def _formula_note(kind: str, k1: int, b: int, n: int, k_true: int) -> str:
    minus = 2 * k1 - b - n
    plus = 2 * k1 + b - n
    return (
        f"{kind}: closed forms 2k-b-n = {minus} and 2k+b-n = {plus} "
        f"disagree with the computed logical dimension {k_true} = b; "
        f"reporting the computed value"
    )


def extend_by_polynomial(c1: CyclicCode, f: Polynomial,
                         budget: int = DEFAULT_BUDGET, *,
                         purity: bool | None = None,
                         workers: int = 1) -> tuple[CyclicCode, AqecParams]:
    """Extend g1 to g1*f (f a monic divisor of the parity polynomial h1).

    The product generates the dual of the new partner code C2; the derived
    quantum code has logical dimension exactly deg f, which is asserted.
    """
    if f.field != c1.field:
        raise ValueError(f"f is over {f.field}, code is over {c1.field}")
    if f.is_zero or f.degree < 1:
        raise ValueError("f must have degree at least 1")
    if not f.is_monic:
        raise ValueError("f must be monic")
    h1 = c1.parity_polynomial
    if not f.divides(h1):
        raise ValueError(
            f"f = {render_poly(f)} does not divide the parity polynomial {render_poly(h1)}"
        )
    n, q = c1.n, c1.q
    ext_code = _roots_of(f, c1)
    if len(ext_code) != f.degree:
        raise InternalConsistencyError(
            f"divisor of x^{n}-1 of degree {f.degree} has {len(ext_code)} roots"
        )
    if ext_code & c1.T.members:
        raise InternalConsistencyError("root set of f overlaps the defining set of C1")
    c2perp = from_defining_set(n, q, c1.T.members | ext_code)
    if c2perp.generator_polynomial != f * c1.generator_polynomial:
        raise InternalConsistencyError("extended generator does not match f * g1")
    c2 = c2perp.dual()
    params = css_aqec(c1, c2, budget, purity=purity, workers=workers)
    b = int(f.degree)
    if params.k != b:
        raise InternalConsistencyError(
            f"logical dimension {params.k} != deg f = {b} on the generator route"
        )
    note = _formula_note("generator-extension", c1.k, b, n, params.k)
    params = replace(params, route="extend-poly", notes=params.notes + (note,))
    return c2, params


def _roots_of(f: Polynomial, code: CyclicCode) -> frozenset[int]:
    """Exponents i with f(alpha^i) = 0, alpha the primitive n-th root."""
    ext, alpha = nth_root_field(code.n, code.q)
    embed, _ = subfield_embedding(code.field, ext)
    out = set()
    for i in range(code.n):
        point = FieldElement(ext, ext.pow_i(alpha.value, i))
        if f.evaluate_embedded(point, embed) == 0:
            out.add(i)
    return frozenset(out)


def extend_by_defining_set(c1: CyclicCode, members: Sequence[int],
                           budget: int = DEFAULT_BUDGET, *,
                           purity: bool | None = None,
                           workers: int = 1) -> tuple[CyclicCode, AqecParams]:
    """Build the partner code from a coset block T inside T(C1-dual) minus T(C1).

    C2 gets defining set T(C1-dual) minus (T union -T); the identity
    T(C2-dual) = T(C1) union (T union -T) and the nesting premise are
    verified, and the logical dimension |T union -T| is asserted.
    """
    n, q = c1.n, c1.q
    T = DefiningSet.closed(n, q, members)
    c1perp = c1.dual()
    allowed = c1perp.T.members - c1.T.members
    if not T.members <= allowed:
        raise ValueError(
            f"T={T} is not inside the admissible difference set "
            f"{{{','.join(map(str, sorted(allowed)))}}}"
        )
    tt = T.members | T.inverse().members
    c2 = from_defining_set(n, q, c1perp.T.members - tt)
    c2perp = c2.dual()
    if c2perp.T.members != (c1.T.members | tt):
        raise InternalConsistencyError(
            "defining set of the dual partner is not T(C1) union T union -T"
        )
    if not c1.contains(c2perp):
        raise NotNested(f"derived partner of {c1.descriptor()} fails the nesting premise")
    params = css_aqec(c1, c2, budget, purity=purity, workers=workers)
    b = len(tt)
    if params.k != b:
        raise InternalConsistencyError(
            f"logical dimension {params.k} != |T union -T| = {b} on the defining-set route"
        )
    note = _formula_note("defining-set-extension", c1.k, b, n, params.k)
    dim_note = (
        f"defining-set-extension: dim C2 computed as n-k+b = {n - c1.k + b} "
        f"(not k+b = {c1.k + b}); dim C2-dual = k-b = {c1.k - b}"
    )
    params = replace(params, route="extend-set", notes=params.notes + (note, dim_note))
    return c2, params


# ---------------------------------------------------------------------------
# Subsystem codes
# ---------------------------------------------------------------------------

def correction_capability(a: AqecParams | SubsystemParams) -> CorrectionCapability:
    """Guaranteed radii floor((d-1)/2) per error type; flagged when bounds."""
    return CorrectionCapability(
        t_x=(a.dx.value - 1) // 2,
        t_z=(a.dz.value - 1) // 2,
        exact=a.dx.is_exact and a.dz.is_exact,
    )


def aqec_to_subsystem(a: AqecParams, r: int) -> SubsystemParams:
    """Trade r of the logical qudits of a stabilizer code into gauge qudits."""
    if not 0 <= r <= a.k:
        raise ValueError(f"gauge dimension r={r} out of range 0..{a.k}")
    return SubsystemParams(
        a.n, a.q, a.k - r, r, a.dz, a.dx, a.pure, a.c1, a.c2,
        "aqec-to-subsystem", a.notes,
    )


def subsystem_euclidean(c1: CyclicCode, budget: int = DEFAULT_BUDGET, *,
                        purity: bool | None = None,
                        workers: int = 1) -> tuple[SubsystemParams, SubsystemParams]:
    """Subsystem pair from a single code via C2 = C1 intersect C1-dual.

    Returns [[n, n-(k1+k2), k1-k2, dz/dx]] and the role-swapped
    [[n, k1-k2, n-(k1+k2), dz/dx]]. Since k2 <= n-k1 always, k1+k2 = n is
    the degenerate boundary and is reported with zero logical dimension.
    """
    n, q = c1.n, c1.q
    c1perp = c1.dual()
    c2 = intersect(c1, c1perp)
    k1, k2 = c1.k, c2.k
    if k1 + k2 > n:
        raise InternalConsistencyError("dim(C1) + dim(C1 intersect C1-dual) exceeded n")
    c2perp = c2.dual()
    side_a = _difference_side(c2perp, c1, budget, workers)   # wt(C2-dual minus C1)
    side_b = _difference_side(c1perp, c2, budget, workers)   # wt(C1-dual minus C2)
    if side_a.is_exact and side_b.is_exact:
        dx, dz = sorted((side_a, side_b), key=lambda r: r.value)
    else:
        dx, dz = sorted((side_a, side_b), key=lambda r: (r.value, not r.is_exact))
    pure: bool | None = None
    if (purity if purity is not None else n <= PURITY_AUTO_LIMIT):
        pure = _evaluate_purity(side_a, side_b, c2perp, c1perp, budget, workers)
    k, r = n - (k1 + k2), k1 - k2
    notes = (f"intersection code C2 = C1 ^ C1-dual is [{n},{k2}]_{q}",)
    first = SubsystemParams(n, q, k, r, dz, dx, pure, c1, c2, "subsystem-euclidean", notes)
    swapped = SubsystemParams(n, q, r, k, dz, dx, pure, c1, c2, "subsystem-euclidean", notes)
    return first, swapped


def trade_dimension(s: SubsystemParams) -> SubsystemParams:
    """Trade one logical qudit for one gauge qudit: k-1, r+1, distances kept
    only as lower bounds."""
    if s.k <= 1:
        raise ValueError(f"trading requires k > 1, have k={s.k}")
    dz = WeightReport(s.dz.value, "bound-only", 0, s.dz.budget)
    dx = WeightReport(s.dx.value, "bound-only", 0, s.dx.budget)
    note = (
        "dimension trade: distances become lower bounds; "
        f"purity holds to min(dx, previous purity level) = {s.dx.value}"
    )
    return SubsystemParams(
        s.n, s.q, s.k - 1, s.r + 1, dz, dx, None, s.c1, s.c2,
        "trade-dimension", s.notes + (note,),
    )


def subsystem_to_stabilizer(s: SubsystemParams) -> AqecParams:
    """Promote a pure subsystem code to a stabilizer code on k + r logicals."""
    if s.pure is not True:
        raise ValueError("promotion to a stabilizer code requires a pure subsystem code")
    return AqecParams(
        s.n, s.q, s.k + s.r, s.dz, s.dx, True, s.c1, s.c2,
        "subsystem-to-stabilizer", s.notes,
    )
