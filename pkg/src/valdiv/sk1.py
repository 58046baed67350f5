"""Norm-one elements, commutator witnesses and the triviality verdict engine.

Every constructive routine here is generate-and-verify: a Hilbert-90 style
resolvent produces a candidate, conjugation supplies the Galois action, and
the returned witness is accepted only after exact (certified-precision)
re-multiplication.  The verdict engine encodes the sufficient conditions for
a trivial reduced Whitehead group as a rule dispatch that never asserts
non-triviality.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    CharPolyMismatchError,
    ConjugatorSearchError,
    DegenerateDecompositionError,
    InvariantBreachError,
    NoRepresentativeError,
    NormCertificateError,
    PrecisionExhaustedError,
)
from .laurent import INFINITE_VALUATION
from .ordered import QuotientStructure
from .symbol import AlgebraElement, RamificationReport, SymbolAlgebra


@dataclass(frozen=True)
class NormOneElement:
    """An element together with its certified reduced-norm-one evidence."""

    element: AlgebraElement
    certificate: object  # the computed reduced norm (a tower element)

    def __str__(self):
        return str(self.element)


@dataclass(frozen=True)
class CommutatorWitness:
    """factors (x_k, y_k) with prod x y x^-1 y^-1 equal to the target."""

    factors: tuple[tuple[AlgebraElement, AlgebraElement], ...]
    target: AlgebraElement

    def product(self) -> AlgebraElement:
        alg = self.target.algebra
        acc = alg.one()
        for x, y in self.factors:
            acc = acc * (x * y * x.inv() * y.inv())
        return acc

    def verify(self) -> bool:
        return self.product().agrees_to_precision(self.target)

    def __len__(self):
        return len(self.factors)


@dataclass(frozen=True)
class DiagramContext:
    """Index bookkeeping around the norm-one/commutator comparison.

    zeta follows the tameness rule (tame algebras report 1); the raw value of
    ind/(ind_0 * [Z(D_0):F_0]) is kept alongside whenever the residue data
    determine it, so disagreements stay visible.
    """

    zeta: int | None
    zeta_formula_inputs: dict | None
    galois_order: int | None
    grade_quotient: QuotientStructure
    h_minus_1_trivial: bool | None
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class Verdict:
    conclusion: str  # "trivial" | "unknown" | "not_applicable"
    rule: str | None
    reasoning: str
    inputs: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "conclusion": self.conclusion,
            "case": self.rule,
            "reasoning": self.reasoning,
            "inputs": dict(self.inputs),
        }


# ---------------------------------------------------------------------------
# certificates and commutators


def certify_norm_one(e: AlgebraElement) -> NormOneElement:
    """Accept e only when Nrd(e) = 1 holds in every certified coefficient."""
    alg = e.algebra
    nr = e.nrd()
    diff = nr - alg.tower.one()
    if diff.is_zero():
        return NormOneElement(e, nr)
    if not diff.indistinguishable_from_zero():
        raise NormCertificateError(f"reduced norm is {nr}, not 1")
    if not diff.certifies_zero_position():
        raise PrecisionExhaustedError("norm-one check undecided at working precision")
    return NormOneElement(e, nr)


def commutator(x: AlgebraElement, y: AlgebraElement) -> NormOneElement:
    """x y x^-1 y^-1, norm-one by multiplicativity and certified on output."""
    z = x * y * x.inv() * y.inv()
    return certify_norm_one(z)


def kappa(algebra: SymbolAlgebra, gamma, delta) -> NormOneElement:
    """Commutator of monomial representatives of two values.

    Alternating and trivial on field values; the output lives in grade 0.
    """
    d_gamma = algebra.monomial_with_value(gamma)
    d_delta = algebra.monomial_with_value(delta)
    if d_gamma is None or d_delta is None:
        raise NoRepresentativeError(f"no monomial representative at {gamma} or {delta}")
    out = commutator(d_gamma, d_delta)
    v = out.element.valuation()
    zero = tuple(Fraction(0) for _ in range(algebra.tower.height))
    if not (v is INFINITE_VALUATION or v == zero):
        raise InvariantBreachError("kappa output left grade zero")
    return out


# ---------------------------------------------------------------------------
# Hilbert 90 and Skolem-Noether, both generate-and-verify


def hilbert90_decompose(a, sigma, order: int, sample, retries: int = 16):
    """Solve a = c * sigma(c)^-1 for a norm-one element of a cyclic layer.

    sigma is any callable realizing the generator of the action (a field
    automorphism, or conjugation inside an algebra); sample(k) draws the
    randomizer for retry k.  The resolvent c = sum_r (prod_{s<r} sigma^s(a))
    sigma^r(b) satisfies a * sigma(c) = c whenever the norm is 1 and c != 0.
    """
    sigma_powers_of_a = [a]
    for _ in range(order - 1):
        sigma_powers_of_a.append(sigma(sigma_powers_of_a[-1]))
    nrm = sigma_powers_of_a[0]
    for s in sigma_powers_of_a[1:]:
        nrm = nrm * s
    one = _one_like(a)
    if not _equalish(nrm, one):
        raise NormCertificateError(f"norm along the cyclic layer is {nrm}, not 1")
    for attempt in range(retries):
        b = sample(attempt)
        c = None
        prefix = None
        sig_b = b
        for r in range(order):
            term = sig_b if prefix is None else prefix * sig_b
            c = term if c is None else c + term
            prefix = (
                sigma_powers_of_a[r]
                if prefix is None
                else prefix * sigma_powers_of_a[r]
            )
            if r < order - 1:
                sig_b = sigma(sig_b)
        if c.indistinguishable_from_zero():
            continue
        if _equalish(a * sigma(c), c):
            return c
    raise DegenerateDecompositionError(
        f"no nonzero resolvent found in {retries} retries"
    )


def _one_like(x):
    if isinstance(x, AlgebraElement):
        return x.algebra.one()
    return x.field.one()


def _equalish(u, v) -> bool:
    return (u - v).indistinguishable_from_zero()


def conjugation(x0: AlgebraElement):
    """The inner automorphism z -> x0 z x0^-1 as a callable."""
    x0_inv = x0.inv()

    def act(z: AlgebraElement) -> AlgebraElement:
        return x0 * z * x0_inv

    return act


def skolem_noether_conjugator(
    k_elem: AlgebraElement,
    target: AlgebraElement,
    rng: random.Random | None = None,
    retries: int = 16,
) -> AlgebraElement:
    """Invertible x with x k x^-1 = target, via the linear system x k = target x.

    Requires equal reduced characteristic polynomials.  The nullspace of
    z -> z k - target z is computed over the tower field and random integer
    combinations are drawn until one is invertible; the result is verified by
    multiplication before being returned.
    """
    alg = k_elem.algebra
    if target.algebra != alg:
        raise CharPolyMismatchError("elements of different algebras")
    pk, pt = k_elem.prd(), target.prd()
    if not all(_equalish(u, v) for u, v in zip(pk, pt)):
        raise CharPolyMismatchError(
            "reduced characteristic polynomials differ; no conjugator exists"
        )
    n = alg.degree
    basis = [(k, l) for k in range(n) for l in range(n)]
    columns = []
    for kl in basis:
        z = alg.monomial(*kl)
        image = z * k_elem - target * z
        columns.append([image.coeffs.get(b, alg.tower.zero()) for b in basis])
    # rows: equations (one per basis coordinate); cols: unknowns
    mat = [[columns[c][r] for c in range(len(basis))] for r in range(len(basis))]
    kernel = _nullspace(alg, mat)
    if not kernel:
        raise ConjugatorSearchError("conjugation system has trivial nullspace")
    rng = rng or random.Random(0)
    for _ in range(retries):
        coeffs = [rng.randint(0, 4) for _ in kernel]
        if not any(coeffs):
            coeffs[rng.randrange(len(kernel))] = 1
        cand = alg.zero()
        for w, vec in zip(coeffs, kernel):
            if w:
                scaled = AlgebraElement(
                    alg,
                    {
                        b: vec[idx] * alg.tower.constant(w)
                        for idx, b in enumerate(basis)
                        if not vec[idx].is_zero()
                    },
                )
                cand = cand + scaled
        if cand.indistinguishable_from_zero():
            continue
        try:
            nr = cand.nrd()
        except PrecisionExhaustedError:
            continue
        if nr.indistinguishable_from_zero():
            continue
        if (cand * k_elem * cand.inv()).agrees_to_precision(target):
            return cand
    raise ConjugatorSearchError(f"no invertible conjugator in {retries} retries")


def _nullspace(alg, mat):
    """Kernel basis of a square matrix over the tower field.

    Pivots prefer low term-count entries so that divisions stay exact on the
    monomial-heavy systems this package builds; zero-to-precision entries are
    treated as zero, and every caller re-verifies results by multiplication.
    """
    tower = alg.tower
    size = len(mat)
    mat = [row[:] for row in mat]
    pivot_of_col: dict[int, int] = {}
    row = 0
    for col in range(size):
        best = None
        for r in range(row, size):
            entry = mat[r][col]
            if entry.indistinguishable_from_zero():
                continue
            cost = _term_count(entry)
            if best is None or cost < best[0]:
                best = (cost, r)
        if best is None:
            continue
        _, r = best
        mat[row], mat[r] = mat[r], mat[row]
        inv = mat[row][col].inv()
        mat[row] = [x * inv for x in mat[row]]
        for rr in range(size):
            if rr != row and not mat[rr][col].indistinguishable_from_zero():
                f = mat[rr][col]
                mat[rr] = [x - f * y for x, y in zip(mat[rr], mat[row])]
        pivot_of_col[col] = row
        row += 1
    free_cols = [c for c in range(size) if c not in pivot_of_col]
    kernel = []
    for fc in free_cols:
        vec = [tower.zero()] * size
        vec[fc] = tower.one()
        for pc, pr in pivot_of_col.items():
            vec[pc] = -mat[pr][fc]
        kernel.append(vec)
    return kernel


def _term_count(tower_elem) -> int:
    def count(payload):
        if not hasattr(payload, "coeffs"):
            return 1
        return sum(count(c) for c in payload.coeffs.values()) + (
            0 if payload.bound is None else 1
        )

    return count(tower_elem.payload)


# ---------------------------------------------------------------------------
# norm-one decomposition


def decompose_norm_one(
    cert: NormOneElement,
    rng: random.Random | None = None,
    retries: int = 16,
) -> CommutatorWitness:
    """Write a certified norm-one element as a product of commutators.

    Supported regimes: the identity; central scalars that are powers of the
    root of unity (their witness is the generator commutator repeated); and
    elements of the cyclic layers generated by powers of i or of j, where
    conjugation by the opposite generator realizes the Galois action and a
    Hilbert-90 resolvent produces the single commutator [c, x0].  Everything
    returned has been re-multiplied and checked.
    """
    rng = rng or random.Random(0)
    e = cert.element
    alg = e.algebra
    n = alg.degree

    if _equalish(e, alg.one()):
        return CommutatorWitness((), e)

    if e.is_scalar():
        witness = _scalar_witness(e, alg)
        if witness is not None:
            return witness
        raise DegenerateDecompositionError(
            "central norm-one scalar outside the root-of-unity image"
        )

    keys = set(e.coeffs)
    if all(l == 0 for _, l in keys):
        conj_by = alg.j()
    elif all(k == 0 for k, _ in keys):
        conj_by = alg.i()
    else:
        conj_by = _search_monomial_conjugator(e, rng)
        if conj_by is None:
            raise DegenerateDecompositionError(
                "element does not generate a recognized conjugation-cyclic layer"
            )

    sigma = conjugation(conj_by)
    order = _action_order(e, sigma, n)
    if order is None:
        raise DegenerateDecompositionError("conjugation does not close on the layer")

    def sample(attempt: int) -> AlgebraElement:
        # random element of the layer generated by e
        out = alg.zero()
        power = alg.one()
        for _ in range(order):
            c = rng.randint(0, max(alg.tower.base.char - 1, 9))
            if c:
                out = out + power.scale(alg.tower.constant(c))
            power = power * e
        return out

    c = hilbert90_decompose(e, sigma, order, sample, retries=retries)
    witness = CommutatorWitness(((c, conj_by),), e)
    if not witness.verify():
        raise DegenerateDecompositionError("resolvent witness failed verification")
    return witness


def _scalar_witness(e: AlgebraElement, alg: SymbolAlgebra):
    s = e.scalar_part()
    power = alg.tower.one()
    for k in range(alg.degree):
        if _equalish(s, power):
            factors = tuple((alg.j(), alg.i()) for _ in range(k))
            witness = CommutatorWitness(factors, e)
            if witness.verify():
                return witness
            return None
        power = power.scale(alg.omega)
    return None


def _search_monomial_conjugator(e: AlgebraElement, rng) -> AlgebraElement | None:
    alg = e.algebra
    n = alg.degree
    candidates = [alg.j(), alg.i()]
    candidates += [
        alg.monomial(k, l)
        for k in range(n)
        for l in range(n)
        if (k, l) not in ((0, 0), (1, 0), (0, 1))
    ]
    for x0 in candidates:
        sigma = conjugation(x0)
        se = sigma(e)
        if _equalish(se * e, e * se) and not _equalish(se, e):
            return x0
    return None


def _action_order(e: AlgebraElement, sigma, bound: int) -> int | None:
    cur = e
    for k in range(1, bound + 1):
        cur = sigma(cur)
        if _equalish(cur, e):
            return k
    return None


# ---------------------------------------------------------------------------
# diagram context and verdict rules


def compute_zeta(
    report: RamificationReport, residue_data: dict | None = None
) -> DiagramContext:
    """Index bookkeeping for the norm-one column.

    Tame algebras report zeta 1 (the tameness rule); the literal quotient
    ind / (ind_0 * [Z(D_0):F_0]) is also recorded whenever the residue data
    pin it down, together with a note when the two disagree.
    """
    notes: list[str] = []
    inputs: dict | None = None
    formula_value: int | None = None
    ind = report.degree if report.is_division else None
    residue_ind: int | None = None
    residue_center_degree: int | None = None
    if report.is_totally_ramified:
        residue_ind, residue_center_degree = 1, 1
    elif report.is_semiramified:
        residue_ind, residue_center_degree = 1, report.residue_degree
    elif residue_data:
        residue_ind = residue_data.get("residue_index")
        residue_center_degree = residue_data.get("residue_center_degree")
    galois_order: int | None = None
    if report.is_totally_ramified:
        galois_order = 1
    elif report.is_semiramified:
        galois_order = report.residue_degree
    elif residue_data:
        galois_order = residue_data.get("galois_order")

    if ind and residue_ind and residue_center_degree:
        inputs = {
            "algebra_index": ind,
            "residue_index": residue_ind,
            "residue_center_degree": residue_center_degree,
        }
        quotient_val = Fraction(ind, residue_ind * residue_center_degree)
        if quotient_val.denominator == 1:
            formula_value = int(quotient_val)

    if report.is_tame:
        zeta = 1
        if formula_value is not None and formula_value != 1:
            notes.append(
                f"raw index quotient is {formula_value}; the tameness rule"
                " overrides it to 1"
            )
    else:
        zeta = formula_value
        if zeta is None:
            notes.append("residue data insufficient; zeta unknown")

    h_triv: bool | None = None
    if galois_order == 1 or report.grade_quotient.is_cyclic:
        h_triv = True

    return DiagramContext(
        zeta=zeta,
        zeta_formula_inputs=inputs,
        galois_order=galois_order,
        grade_quotient=report.grade_quotient,
        h_minus_1_trivial=h_triv,
        notes=tuple(notes),
    )


def _is_power_of(n: int, q: int) -> bool:
    if n < 1:
        return False
    while n % q == 0:
        n //= q
    return n == 1


def _is_squarefree(n: int) -> bool:
    d = 2
    while d * d <= n:
        if n % (d * d) == 0:
            return False
        d += 1
    return True


def verdict(
    profile,
    report: RamificationReport,
    q: int,
    residue_hints: dict | None = None,
) -> Verdict:
    """Dispatch the sufficient conditions for a trivial reduced Whitehead group.

    Rule order: the two rank cases of the main criterion (which need the
    computed cohomological dimension to be exactly 3), then the square-free
    index rule, then the dimension-at-most-2 rule, then the rank-zero
    inertially-split fallback (which needs the caller-supplied hint
    "inertially_split_residue_is_field", since residue algebras are not
    computed in general).  Reports "unknown" only when every hypothesis holds
    and no sufficient condition fires; "not_applicable" when a standing
    hypothesis fails.
    """
    deg = report.degree
    p_bar = profile.residue_char
    inputs: dict = {"q": q, "degree": deg, "residue_char": p_bar}
    if p_bar and q == p_bar:
        return Verdict(
            "not_applicable",
            None,
            f"q = {q} equals the residue characteristic; the coprimality"
            " hypothesis fails",
            inputs,
        )
    q_primary = _is_power_of(deg, q) or deg == 1
    cd = profile.cd_q(q)
    r_q = profile.r_q(q)
    inputs.update({"r_q": r_q, "cd_q": cd.describe()})

    cd_exact_3 = cd.kind == "exact" and cd.value == 3
    residue_cd_finite = cd.residue_finite

    if cd_exact_3 and residue_cd_finite and q_primary and 1 <= r_q <= 3:
        return Verdict(
            "trivial",
            "rank_one_to_three",
            f"cd_q(F) = 3 with finite residue dimension, degree {deg} is"
            f" {q}-primary and the q-rank is {r_q} (between 1 and 3):"
            " the reduced Whitehead group is trivial",
            inputs,
        )
    if (
        cd_exact_3
        and residue_cd_finite
        and q_primary
        and r_q == 0
        and (report.is_semiramified or report.is_totally_ramified)
    ):
        return Verdict(
            "trivial",
            "rank_zero_semiramified_or_totally_ramified",
            "q-rank 0 with a semiramified or totally ramified algebra forces"
            " the value groups to coincide and the group collapses",
            inputs,
        )
    if _is_squarefree(deg):
        return Verdict(
            "trivial",
            "squarefree_index",
            f"the index divides the square-free degree {deg}, which always"
            " gives a trivial reduced Whitehead group",
            inputs,
        )
    if cd.kind == "exact" and cd.value is not None and cd.value <= 2 and q_primary:
        return Verdict(
            "trivial",
            "cohomological_dimension_at_most_two",
            f"cd_q(F) = {cd.value} <= 2 with a {q}-primary index is a known"
            " triviality regime",
            inputs,
        )
    if (
        r_q == 0
        and residue_hints is not None
        and residue_hints.get("inertially_split_residue_is_field")
    ):
        return Verdict(
            "trivial",
            "rank_zero_inertially_split_field_residue",
            "q-rank 0 reduces to an inertially split algebra whose residue"
            " algebra is a field, hence semiramified and trivial",
            inputs,
        )
    if not q_primary:
        return Verdict(
            "not_applicable",
            None,
            f"degree {deg} is not a power of {q}; the q-primary hypothesis fails",
            inputs,
        )
    if not cd_exact_3:
        return Verdict(
            "not_applicable",
            None,
            f"cd_q(F) is {cd.describe()}, not exactly 3; assert an exact value"
            " to enable the rank rules",
            inputs,
        )
    return Verdict(
        "unknown",
        None,
        "no sufficient condition applies: q-rank 0 with a division algebra"
        " that is neither semiramified nor totally ramified lies outside the"
        " proved cases",
        inputs,
    )
