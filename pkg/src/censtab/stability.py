"""Central-stability decisions with machine-checkable certificates.

Element criterion: a is centrally stable iff a lies in Z(A) + Id([a, A]).

Algebra criterion: a finite-dimensional unital algebra over a perfect field
is centrally stable iff rad(A) = Id(Z(A) cap rad(A)); a non-unital algebra
is decided on its unitization, which is equivalent.  The algebra decision
never samples elements -- the centrally stable elements need not form a
subspace, so no amount of sampling could decide the algebra.  Sampling only
serves to produce a concrete non-stable element witness once the criterion
has already answered NotStable.

Every verdict carries a certificate that re-verifies through the linear
algebra layer (see verify_certificate).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

from .algebras import (
    Algebra,
    Element,
    _ideal_closure,
    center,
    commutator_space,
    ideal_generated,
    matrix_units_algebra,
    quotient,
    tensor_product,
    unitization,
)
from .errors import ConsistencyError, DimensionMismatch, UnsupportedCharacteristic
from .linalg import (
    _make_reducer,
    _subspace_from_reducer,
    express_in_span,
    span,
    subspace_intersect,
    subspace_sum,
)
from .radical import radical

STABLE = "Stable"
NOT_STABLE = "NotStable"

METHOD_RADICAL = "RadicalCriterion"
METHOD_UNITIZATION = "UnitizationThenRadicalCriterion"
METHOD_ELEMENT = "ElementCriterion"


# ---------------------------------------------------------------------------
# Certificates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class StableElementWitness:
    """a = z + u with z central and u inside Id([a, A])."""

    element: tuple
    central_part: tuple
    ideal_part: tuple

    kind = "StableElementWitness"


@dataclass(frozen=True)
class UnstableElementWitness:
    """a together with the RREF basis of Z(A) + Id([a, A]), which avoids it."""

    element: tuple
    center_rows: tuple
    ideal_rows: tuple
    sum_rows: tuple

    kind = "UnstableElementWitness"


@dataclass(frozen=True)
class RadicalMatch:
    """Stable algebra: Id(Z cap rad) equals rad."""

    radical_rows: tuple
    center_cap_radical_rows: tuple
    ambient: str  # "algebra" or "unitization"

    kind = "RadicalMatch"


@dataclass(frozen=True)
class RadicalGap:
    """NotStable algebra: a radical vector outside Id(Z cap rad)."""

    radical_rows: tuple
    center_cap_radical_rows: tuple
    ideal_rows: tuple
    missing_vector: tuple
    ambient: str

    kind = "RadicalGap"


@dataclass(frozen=True)
class WitnessSearchExhausted:
    """NotStable algebra; no element witness found within the budget."""

    samples_tried: int
    gap: RadicalGap

    kind = "WitnessSearchExhausted"


@dataclass(frozen=True)
class StabilityReport:
    verdict: str
    method: str
    certificate: object
    bases: dict = dc_field(default_factory=dict)

    @property
    def is_stable(self) -> bool:
        return self.verdict == STABLE


def random_element(a: Algebra, rng) -> Element:
    """A random element with small coordinates, from a seeded generator."""
    return Element(a, tuple(a.field.random_scalar(rng) for _ in range(a.dim)))


# ---------------------------------------------------------------------------
# Element-level decision
# ---------------------------------------------------------------------------


def element_centrally_stable(x: Element) -> StabilityReport:
    """Decide a in Z(A) + Id([a, A]), with a constructive certificate.

    On Stable, the commutator-ideal closure stops as soon as membership
    holds, so the recorded ideal rows are a sub-span of Id([a, A]) that
    already contains the ideal part u.  On NotStable the closure has reached
    its fixpoint and the avoided subspace Z + Id is recorded in full.
    """
    a = x.algebra
    f = a.field
    z_space = center(a)
    if z_space.contains(x.coords):
        cert = StableElementWitness(
            tuple(x.coords), tuple(x.coords), (f.zero,) * a.dim
        )
        return StabilityReport(
            STABLE, METHOD_ELEMENT, cert, {"center": z_space.rows}
        )

    comm = commutator_space(x)
    combined = _make_reducer(f, a.dim)
    for row in z_space.rows:
        combined.insert(row)

    def mirror(row):
        combined.insert(row)
        return combined.contains(x.coords)

    ideal_red, complete = _ideal_closure(a, list(comm.rows), mirror)

    if complete and not combined.contains(x.coords):
        ideal_space = _subspace_from_reducer(f, a.dim, ideal_red)
        total = subspace_sum(z_space, ideal_space)
        cert = UnstableElementWitness(
            tuple(x.coords), z_space.rows, ideal_space.rows, total.rows
        )
        bases = {"center": z_space.rows, "commutator_ideal": ideal_space.rows}
        return StabilityReport(NOT_STABLE, METHOD_ELEMENT, cert, bases)

    ideal_rows = [ideal_red.rows[p] for p in ideal_red.pivots]
    gens = list(z_space.rows) + ideal_rows
    coeffs = express_in_span(f, gens, x.coords, a.dim)
    assert coeffs is not None
    z_vec = [f.zero] * a.dim
    for c, row in zip(coeffs[: z_space.dim], z_space.rows):
        c = f.coerce(c)
        if c:
            for i, val in enumerate(row):
                if val:
                    z_vec[i] = f.add(z_vec[i], f.mul(c, val))
    u_vec = tuple(f.sub(xi, zi) for xi, zi in zip(x.coords, z_vec))
    cert = StableElementWitness(tuple(x.coords), tuple(z_vec), u_vec)
    partial = _subspace_from_reducer(f, a.dim, ideal_red)
    key = "commutator_ideal" if complete else "commutator_ideal_partial"
    return StabilityReport(
        STABLE, METHOD_ELEMENT, cert, {"center": z_space.rows, key: partial.rows}
    )


def _ideal_contains(a: Algebra, seed_rows, target) -> bool:
    """Is target inside the ideal closure of span(seed_rows)?

    Runs the closure inline so the membership test can stop it as soon as
    the answer is yes; a full fixpoint is only reached for a "no".
    """
    if not any(target):
        return True
    red = _make_reducer(a.field, a.dim)
    work = []
    for v in seed_rows:
        r = red.insert(v)
        if r is not None:
            work.append(r)
            if red.contains(target):
                return True
    while work:
        if red.dim == a.dim:
            return True
        fresh = []
        for v in work:
            for i in range(a.dim):
                for w in (a._basis_mul_vec(i, v), a._vec_mul_basis(v, i)):
                    if w is None:
                        continue
                    r = red.insert(w)
                    if r is not None:
                        fresh.append(r)
                        if red.contains(target):
                            return True
                        if red.dim == a.dim:
                            return True
        work = fresh
    return red.contains(target)


# ---------------------------------------------------------------------------
# Algebra-level decision
# ---------------------------------------------------------------------------


def algebra_centrally_stable(
    a: Algebra, witness_budget: int = 200, seed: int = 0
) -> StabilityReport:
    """Decide central stability of a whole algebra.

    Unital input is decided by rad(A) = Id(Z(A) cap rad(A)); non-unital
    input is decided on the unitization (an equivalence).  On NotStable a
    concrete non-stable element is searched for: first a lift of a nonzero
    element of Z(A/J) cap rad(A/J) through the quotient by J = Id(Z cap rad)
    (such a lift can never be stable), then all basis elements, then up to
    witness_budget random elements.  Witnesses are always elements of the
    input algebra, also in the unitization route, and each is confirmed by
    element_centrally_stable before being reported.
    """
    if a.dim == 0:
        return StabilityReport(STABLE, METHOD_RADICAL, RadicalMatch((), (), "algebra"))
    if a.is_unital:
        work, embed, method, ambient = a, None, METHOD_RADICAL, "algebra"
    else:
        uni = unitization(a)
        work, embed, method, ambient = uni.algebra, uni, METHOD_UNITIZATION, "unitization"

    z = center(work)
    r = radical(work)
    c = subspace_intersect(z, r)
    j = ideal_generated(work, [work.element(row) for row in c.rows])
    bases = {
        "center": z.rows,
        "radical": r.rows,
        "center_cap_radical": c.rows,
        "criterion_ideal": j.rows,
        "ambient": ambient,
    }
    if j == r:
        return StabilityReport(STABLE, method, RadicalMatch(r.rows, c.rows, ambient), bases)

    missing = next(row for row in r.rows if not j.contains(row))
    gap = RadicalGap(r.rows, c.rows, j.rows, tuple(missing), ambient)
    if witness_budget <= 0:
        return StabilityReport(NOT_STABLE, method, gap, bases)

    tried = 0
    for cand in _witness_candidates(a, work, embed, r, j, witness_budget, seed):
        tried += 1
        rep = element_centrally_stable(cand)
        if rep.verdict == NOT_STABLE:
            return StabilityReport(NOT_STABLE, method, rep.certificate, bases)
    return StabilityReport(
        NOT_STABLE, method, WitnessSearchExhausted(tried, gap), bases
    )


def _witness_candidates(a, work, embed, rad_space, j, budget, seed):
    f = a.field
    # (1) lift of a nonzero element of Z(A/J) cap rad(A/J); by the criterion's
    # proof such an element can never be centrally stable in A
    try:
        qm = quotient(work, j)
        if qm.target.dim > 0:
            zq = center(qm.target)
            rq = radical(qm.target)
            inter = subspace_intersect(zq, rq)
            if inter.dim > 0:
                zbar = inter.rows[0]
                proj = [qm.project_vec(row) for row in rad_space.rows]
                coeffs = express_in_span(f, proj, zbar, qm.target.dim)
                if coeffs is not None:
                    v = [f.zero] * work.dim
                    for cf, row in zip(coeffs, rad_space.rows):
                        cf = f.coerce(cf)
                        if cf:
                            for i, val in enumerate(row):
                                if val:
                                    v[i] = f.add(v[i], f.mul(cf, val))
                    if embed is not None:
                        assert v[0] == 0  # radical vectors avoid the adjoined unity
                        yield a.element(embed.strip_vec(v))
                    else:
                        yield a.element(v)
    except UnsupportedCharacteristic:
        pass
    # (2) basis elements
    for i in range(a.dim):
        yield a.basis_element(i)
    # (3) seeded random elements
    rng = random.Random(f"{seed}:witness")
    for _ in range(budget):
        yield random_element(a, rng)


# ---------------------------------------------------------------------------
# The definitional oracle: Z(A/I) = (Z(A) + I)/I
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class OracleResult:
    equal: bool
    quotient_center: object  # Subspace in quotient coordinates
    center_image: object  # projection of Z(A), also in quotient coordinates
    map: object  # the QuotientMap used


def quotient_center_oracle(a: Algebra, ideal) -> OracleResult:
    """Compare the quotient's center with the projected center of a."""
    qm = quotient(a, ideal)
    zq = center(qm.target)
    img = span(
        a.field,
        [qm.project_vec(row) for row in center(a).rows],
        qm.target.dim,
    )
    return OracleResult(zq == img, zq, img, qm)


# ---------------------------------------------------------------------------
# Tensor decomposition t = a (x) 1 + s in A (x) M_n(F)
# ---------------------------------------------------------------------------


@lru_cache(maxsize=32)
def tensor_with_matrices(a: Algebra, n: int) -> Algebra:
    """A (x) M_n(F) with the documented basis order (cached per algebra)."""
    return tensor_product(a, matrix_units_algebra(a.field, n))


@dataclass(frozen=True)
class TensorDecomposition:
    tensor_algebra: Algebra
    diagonal_part: Element  # the privileged diagonal block, an element of A
    stable_part: Element  # s = t - diagonal_part (x) 1, centrally stable in T
    pivot: int
    checks: dict
    diagonal_report: StabilityReport
    full_report: StabilityReport | None  # set when the diagonal part is stable


def decompose_tensor_element(
    a: Algebra, n: int, t_coords, pivot: int | None = None
) -> TensorDecomposition:
    """Split t in A (x) M_n(F) as a (x) 1 + s with s centrally stable.

    The privileged diagonal slot is (n, n) by default; pivot moves it to
    (pivot, pivot), which corresponds to conjugating by the permutation that
    swaps the two slots.  Verified on the way out: s lies in Id([s, T]) and
    in Id([t, T]), and when the diagonal part is a stable element of A, t is
    a stable element of T.  A failure of either check raises
    ConsistencyError, since both are theorems.
    """
    if a.unity is None:
        raise ValueError("tensor decomposition needs a unital left factor")
    if n < 1:
        raise DimensionMismatch("matrix size must be >= 1")
    T = tensor_with_matrices(a, n)
    f = a.field
    t_coords = tuple(f.coerce(c) for c in t_coords)
    if len(t_coords) != T.dim:
        raise DimensionMismatch(f"expected {T.dim} coordinates, got {len(t_coords)}")
    p = n if pivot is None else pivot
    if not 1 <= p <= n:
        raise DimensionMismatch(f"pivot must be in 1..{n}")
    pp = p - 1

    diag = tuple(t_coords[j * n * n + pp * n + pp] for j in range(a.dim))
    s = list(t_coords)
    for j in range(a.dim):
        if diag[j]:
            for q in range(n):
                idx = j * n * n + q * n + q
                s[idx] = f.sub(s[idx], diag[j])
    s = tuple(s)
    t_el = T.element(t_coords)
    s_el = T.element(s)

    checks = {
        "stable_part_in_own_commutator_ideal": _ideal_contains(
            T, commutator_space(s_el).rows, s
        ),
        "stable_part_in_full_commutator_ideal": _ideal_contains(
            T, commutator_space(t_el).rows, s
        ),
    }
    if not all(checks.values()):
        raise ConsistencyError(f"tensor decomposition postcondition failed: {checks}")

    diag_rep = element_centrally_stable(a.element(diag))
    full_rep = None
    if diag_rep.verdict == STABLE:
        full_rep = element_centrally_stable(t_el)
        if full_rep.verdict != STABLE:
            raise ConsistencyError(
                "stable diagonal part but unstable tensor element"
            )
    return TensorDecomposition(T, a.element(diag), s_el, p, checks, diag_rep, full_rep)


# ---------------------------------------------------------------------------
# Randomized consistency fuzzing
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FuzzFinding:
    kind: str
    sample_index: int
    detail: str


@dataclass(frozen=True)
class FuzzReport:
    algebra_verdict: str
    ideal_samples: int
    element_samples: int
    seed: int
    findings: tuple

    @property
    def ok(self) -> bool:
        return not self.findings


def fuzz_consistency(
    a: Algebra, ideal_samples: int, element_samples: int, seed: int = 0
) -> FuzzReport:
    """Randomized cross-checks of the criteria against each other.

    For a Stable algebra every random quotient must pass the center oracle
    and re-test Stable, and every random element must test Stable; any
    violation is recorded as a FATAL finding.  Sample streams are derived
    from (seed, index), so the report is reproducible.
    """
    base = algebra_centrally_stable(a, witness_budget=0, seed=seed)
    findings = []
    for idx in range(ideal_samples):
        rng = random.Random(f"{seed}:ideal:{idx}")
        gens = [random_element(a, rng) for _ in range(rng.randint(1, 2))]
        ideal = ideal_generated(a, gens)
        res = quotient_center_oracle(a, ideal)
        if base.is_stable:
            if not res.equal:
                findings.append(
                    FuzzFinding(
                        "FATAL:quotient-center",
                        idx,
                        f"Z(A/I) dim {res.quotient_center.dim} != image dim {res.center_image.dim}",
                    )
                )
            sub = algebra_centrally_stable(res.map.target, witness_budget=0, seed=seed)
            if not sub.is_stable:
                findings.append(
                    FuzzFinding(
                        "FATAL:quotient-verdict",
                        idx,
                        f"quotient of a stable algebra by a dim-{ideal.dim} ideal tested NotStable",
                    )
                )
    for idx in range(element_samples):
        rng = random.Random(f"{seed}:element:{idx}")
        x = random_element(a, rng)
        if base.is_stable:
            rep = element_centrally_stable(x)
            if rep.verdict != STABLE:
                findings.append(
                    FuzzFinding(
                        "FATAL:element-verdict",
                        idx,
                        "element of a stable algebra tested NotStable",
                    )
                )
    return FuzzReport(
        base.verdict, ideal_samples, element_samples, seed, tuple(findings)
    )


# ---------------------------------------------------------------------------
# Certificate replay
# ---------------------------------------------------------------------------


def verify_certificate(a: Algebra, report: StabilityReport) -> bool:
    """Re-verify a report's certificate from the algebra alone."""
    cert = report.certificate
    f = a.field
    if isinstance(cert, StableElementWitness):
        x, z, u = cert.element, cert.central_part, cert.ideal_part
        if tuple(f.add(zi, ui) for zi, ui in zip(z, u)) != tuple(x):
            return False
        if not center(a).contains(z):
            return False
        return _ideal_contains(
            a, commutator_space(Element(a, tuple(x))).rows, u
        )
    if isinstance(cert, UnstableElementWitness):
        x = cert.element
        z = center(a)
        if z.rows != cert.center_rows:
            return False
        ideal = _commutator_ideal(a, tuple(x))
        if ideal.rows != cert.ideal_rows:
            return False
        total = subspace_sum(z, ideal)
        if total.rows != cert.sum_rows:
            return False
        return not total.contains(x)
    if isinstance(cert, (RadicalMatch, RadicalGap, WitnessSearchExhausted)):
        gap = cert.gap if isinstance(cert, WitnessSearchExhausted) else cert
        work = a if gap.ambient == "algebra" else unitization(a).algebra
        rad = radical(work)
        if rad.rows != gap.radical_rows:
            return False
        c = subspace_intersect(center(work), rad)
        if c.rows != gap.center_cap_radical_rows:
            return False
        j = ideal_generated(work, [work.element(row) for row in c.rows])
        if isinstance(cert, RadicalMatch):
            return j == rad
        if j.rows != gap.ideal_rows:
            return False
        return rad.contains(gap.missing_vector) and not j.contains(gap.missing_vector)
    return False


def _commutator_ideal(a: Algebra, coords):
    comm = commutator_space(Element(a, tuple(coords)))
    return ideal_generated(a, [a.element(r) for r in comm.rows])
