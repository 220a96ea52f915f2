"""Linear identities on additive maps: constraint systems, checkers, full
solution spaces, and the constructive decompositions that witness why the
solution spaces collapse the way they do.

Every supported identity is linear in the unknown map D (the correction terms
built from D(1) included), so the maps satisfying it form a submodule of the
flattened map-coordinate space.  Identities come in two quantification
flavours:

  * unconditional kinds quantify over all ordered pairs of module basis
    elements - enough, since every term is bilinear in the pair;
  * conditional kinds quantify over concrete pair sets (two-sided zero
    products, anticommuting pairs, or one-sided zero products), either
    enumerated exhaustively or instantiated from the structured schema family.

The identity term tables live in ``IDENTITY_TERMS`` keyed by tag.  Checkers
evaluate the terms directly pair by pair; constraint assembly turns the same
terms into rows over the flattened unknowns.  The two routes share the
definitions but not the evaluation code, and the test suite plays them against
each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GuardError, InternalVerificationError, PreconditionError
from .linalg import ResidueMatrix, SolutionModule, solve_affine, solve_homogeneous
from .maps import AdditiveMap, as_bimodule, inner_derivation, lift_map, right_multiplier
from .rings import (
    Bimodule,
    RingElement,
    act_left,
    act_right,
    anti_commuting_pairs,
    basis_elements,
    bimodule_center,
    bimodule_rank,
    is_unital,
    left_action_matrix,
    left_zero_pairs,
    matrix_unit,
    mul_coords,
    one_element,
    require_odd,
    right_action_matrix,
    ring_rank,
    structure,
    zero_product_pairs,
)

# ---------------------------------------------------------------------------
# Identity catalogue
# ---------------------------------------------------------------------------
# A term (coef, left, arg, right) stands for coef * left.D(arg).right, with
# left/right in {"a", "b", None} and arg in {"a", "b", "one", "ab", "ba",
# "ab+ba"}.  An identity asserts that its term sum vanishes on every
# quantified pair.

_DERIVATION = (
    (1, None, "ab", None),
    (-1, None, "a", "b"),
    (-1, "a", "b", None),
)
_JORDAN = (
    (1, None, "ab+ba", None),
    (-1, None, "a", "b"),
    (-1, "a", "b", None),
    (-1, None, "b", "a"),
    (-1, "b", "a", None),
)
_STAR = (
    (1, None, "a", "b"),
    (1, "a", "b", None),
    (1, None, "b", "a"),
    (1, "b", "a", None),
)


@dataclass(frozen=True)
class IdentitySpec:
    tag: str
    terms: tuple
    quantifier: str  # basis_pairs | zero_products | anti_commuting | left_zero


IDENTITY_TERMS = {
    "derivation": IdentitySpec("derivation", _DERIVATION, "basis_pairs"),
    "generalized_derivation": IdentitySpec(
        "generalized_derivation", _DERIVATION + ((1, "a", "one", "b"),), "basis_pairs"
    ),
    "jordan": IdentitySpec("jordan", _JORDAN, "basis_pairs"),
    "generalized_jordan": IdentitySpec(
        "generalized_jordan",
        _JORDAN + ((1, "a", "one", "b"), (1, "b", "one", "a")),
        "basis_pairs",
    ),
    "star": IdentitySpec("star", _STAR, "zero_products"),
    "star_star": IdentitySpec(
        "star_star",
        _STAR + ((-1, "a", "one", "b"), (-1, "b", "one", "a")),
        "zero_products",
    ),
    "phi": IdentitySpec(
        "phi",
        ((1, None, "ab+ba", None), (-1, "a", "b", None), (-1, None, "b", "a")),
        "basis_pairs",
    ),
    "remark_antizero": IdentitySpec("remark_antizero", _STAR, "anti_commuting"),
    # The hypothesis is one-sided (ab = 0 only); the companion ba = 0 is
    # deliberately not imposed.
    "remark_abzero": IdentitySpec(
        "remark_abzero", _STAR + ((-1, None, "ab+ba", None),), "left_zero"
    ),
}

IDENTITY_KINDS = tuple(IDENTITY_TERMS)


def _spec_for(kind):
    try:
        return IDENTITY_TERMS[kind]
    except KeyError:
        raise ValueError(f"unknown identity kind {kind!r}") from None


def _pairs_for(spec, ring, pair_mode, threads=1):
    if spec.quantifier == "basis_pairs":
        basis = basis_elements(ring)
        return [(a, b) for a in basis for b in basis]
    if spec.quantifier == "zero_products":
        return zero_product_pairs(ring, pair_mode, threads=threads)
    if spec.quantifier == "anti_commuting":
        return anti_commuting_pairs(ring, pair_mode, threads=threads)
    if spec.quantifier == "left_zero":
        return left_zero_pairs(ring, pair_mode, threads=threads)
    raise ValueError(f"unknown quantifier {spec.quantifier!r}")


def _pair_values(ring, a, b):
    m = ring.m
    ab = mul_coords(ring, a.coords, b.coords)
    ba = mul_coords(ring, b.coords, a.coords)
    return {
        "a": a.coords,
        "b": b.coords,
        "one": structure(ring).one,
        "ab": ab,
        "ba": ba,
        "ab+ba": tuple((x + y) % m for x, y in zip(ab, ba)),
    }


def _act_vec(mat, vec, m):
    return tuple(sum(r[j] * vec[j] for j in range(len(vec)) if r[j]) % m for r in mat)


class _ActionCache:
    """Left/right action matrices for the handful of elements of one pair."""

    def __init__(self, bim, values):
        self.bim = bim
        self.values = values
        self.memo = {}

    def get(self, side, name):
        key = (side, name)
        if key not in self.memo:
            coords = self.values[name]
            if side == "L":
                self.memo[key] = left_action_matrix(self.bim, coords)
            else:
                self.memo[key] = right_action_matrix(self.bim, coords)
        return self.memo[key]


def _residual(spec, fmap, bim, values, cache):
    m = bim.ring.m
    rank = bimodule_rank(bim)
    acc = [0] * rank
    for coef, lft, arg, rgt in spec.terms:
        v = fmap.apply(values[arg])
        if rgt is not None:
            v = _act_vec(cache.get("R", rgt), v, m)
        if lft is not None:
            v = _act_vec(cache.get("L", lft), v, m)
        for t in range(rank):
            acc[t] = (acc[t] + coef * v[t]) % m
    return tuple(acc)


# ---------------------------------------------------------------------------
# Public check / solve surface
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    a: RingElement
    b: RingElement
    residual: tuple

    def to_json(self):
        return {
            "a": self.a.to_json(),
            "b": self.b.to_json(),
            "residual": list(self.residual),
        }


@dataclass(frozen=True)
class CheckReport:
    passed: bool
    witness: Witness | None = None

    def to_json(self):
        return {
            "passed": self.passed,
            "witness": self.witness.to_json() if self.witness else None,
        }


def check(fmap, kind, pair_mode="structured", threads=1):
    """Evaluate the identity directly on every required pair.

    Pairs run in deterministic order (basis-lexicographic, or the enumeration
    order of the conditional pair set); the first failure is the witness.
    """
    spec = _spec_for(kind)
    ring = fmap.domain
    bim = fmap.codomain
    for a, b in _pairs_for(spec, ring, pair_mode, threads=threads):
        values = _pair_values(ring, a, b)
        cache = _ActionCache(bim, values)
        res = _residual(spec, fmap, bim, values, cache)
        if any(res):
            return CheckReport(False, Witness(a, b, res))
    return CheckReport(True)


@dataclass(frozen=True)
class ConstraintSystem:
    kind: str
    ring: object
    bimodule: Bimodule
    pair_mode: str
    matrix: ResidueMatrix
    pair_count: int


def _constraint_rows(spec, ring, bim, pairs):
    rank_m = bimodule_rank(bim)
    rank_a = ring_rank(ring)
    width = rank_m * rank_a
    m = ring.m
    rows = []
    for a, b in pairs:
        values = _pair_values(ring, a, b)
        cache = _ActionCache(bim, values)
        block = [[0] * width for _ in range(rank_m)]
        for coef, lft, arg, rgt in spec.terms:
            w = values[arg]
            if lft is None and rgt is None:
                outer = None
            elif lft is None:
                outer = cache.get("R", rgt)
            elif rgt is None:
                outer = cache.get("L", lft)
            else:
                lm = cache.get("L", lft)
                rm = cache.get("R", rgt)
                outer = [
                    [
                        sum(lm[e][k] * rm[k][u] for k in range(rank_m)) % m
                        for u in range(rank_m)
                    ]
                    for e in range(rank_m)
                ]
            for e in range(rank_m):
                row = block[e]
                if outer is None:
                    off = e * rank_a
                    for v, wv in enumerate(w):
                        if wv:
                            row[off + v] = (row[off + v] + coef * wv) % m
                else:
                    pe = outer[e]
                    for u in range(rank_m):
                        pu = pe[u]
                        if pu:
                            cc = coef * pu
                            off = u * rank_a
                            for v, wv in enumerate(w):
                                if wv:
                                    row[off + v] = (row[off + v] + cc * wv) % m
        rows.extend(block)
    return rows, width


def constraint_system(kind, ring, bimodule=None, pair_mode="structured", threads=1):
    """Homogeneous system over the flattened map matrix whose solution set is
    exactly the maps satisfying the identity."""
    spec = _spec_for(kind)
    bim = as_bimodule(bimodule if bimodule is not None else ring)
    if bim.ring != ring:
        raise ValueError("bimodule is not over the given ring")
    if ring_rank(ring) == 0:
        raise GuardError("degenerate rank-0 ring")
    pairs = _pairs_for(spec, ring, pair_mode, threads=threads)
    rows, width = _constraint_rows(spec, ring, bim, pairs)
    mat = (
        ResidueMatrix.from_rows(ring.m, rows)
        if rows
        else ResidueMatrix.zeros(ring.m, 0, width)
    )
    return ConstraintSystem(kind, ring, bim, pair_mode, mat, len(pairs))


def solve_all(kind, ring, bimodule=None, pair_mode="structured", threads=1):
    """Canonical module of all maps (as flattened matrices) satisfying the
    identity kind."""
    system = constraint_system(kind, ring, bimodule, pair_mode, threads=threads)
    return solve_homogeneous(system.matrix)


def maps_from_module(module, ring, codomain):
    """The generator rows of a map-space module, as additive maps."""
    bim = as_bimodule(codomain)
    return [AdditiveMap.from_flat(ring, bim, row) for row in module.generators.to_rows()]


def right_multiplier_module(codomain, c_module=None):
    """Span of {a |-> a.c} with c running over a coordinate module (default:
    the whole codomain), flattened like every other map space."""
    bim = as_bimodule(codomain)
    rank_m = bimodule_rank(bim)
    width = rank_m * ring_rank(bim.ring)
    if c_module is None:
        gens = [tuple(1 if k == j else 0 for k in range(rank_m)) for j in range(rank_m)]
    else:
        gens = c_module.generators.to_rows()
    rows = [right_multiplier(bim, tuple(g)).to_flat() for g in gens]
    return SolutionModule.from_rows(bim.ring.m, width, rows)


def inner_derivation_module(codomain):
    """Span of all inner derivations into the codomain."""
    bim = as_bimodule(codomain)
    rank_m = bimodule_rank(bim)
    width = rank_m * ring_rank(bim.ring)
    rows = [
        inner_derivation(bim, tuple(1 if k == j else 0 for k in range(rank_m))).to_flat()
        for j in range(rank_m)
    ]
    return SolutionModule.from_rows(bim.ring.m, width, rows)


# ---------------------------------------------------------------------------
# Constructive decomposition: zero-product condition => derivation + a.D(1)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DecompositionTrace:
    """Intermediate objects of the corner-peeling decomposition.

    ``delta`` is the derivation part and ``central`` the image of 1, so that
    D(x) = delta(x) + x.central on every basis element; ``d`` is delta with
    the inner derivation by the corner element ``m_elt`` removed.
    """

    e: RingElement
    f: RingElement
    m_elt: tuple
    delta: AdditiveMap
    d: AdditiveMap
    central: tuple

    def to_json(self):
        return {
            "e": self.e.to_json(),
            "f": self.f.to_json(),
            "m_elt": list(self.m_elt),
            "delta": self.delta.to_json(),
            "d": self.d.to_json(),
            "central": list(self.central),
        }


def _corner_element(bim, e, f, d_of_e):
    """m = e.D(e).f - f.D(e).e in module coordinates."""
    m = bim.ring.m
    lhs = act_right(bim, act_left(bim, e.coords, d_of_e), f.coords)
    rhs = act_right(bim, act_left(bim, f.coords, d_of_e), e.coords)
    return tuple((x - y) % m for x, y in zip(lhs, rhs))


def decompose_theorem21(dmap, pair_mode="structured"):
    """Split a map satisfying the two-sided zero-product condition into a
    derivation plus right multiplication by the central element D(1).

    The construction peels the inner derivation by the corner element
    m = E.D(E).F - F.D(E).E off D, then the right multiplier by D(1) off the
    remainder.  All postconditions are re-verified; a failure raises, because
    it would constitute a numerical counterexample to the decomposition and
    must never happen over an odd modulus.
    """
    ring = dmap.domain
    bim = dmap.codomain
    if ring.kind != "matrix":
        raise ValueError("the decomposition needs a matrix ring domain")
    require_odd(ring, "the zero-product decomposition")
    if not is_unital(bim):
        raise ValueError("the decomposition needs a unital codomain")
    report = check(dmap, "star", pair_mode=pair_mode)
    if not report.passed:
        raise PreconditionError(
            "map does not satisfy the zero-product condition", report
        )
    e = matrix_unit(ring, 1, 1)
    f = one_element(ring) - e
    m_elt = _corner_element(bim, e, f, dmap.apply(e))
    i_m = inner_derivation(bim, m_elt)
    central = dmap.apply(one_element(ring))
    d = (dmap - i_m) - right_multiplier(bim, central)
    delta = d + i_m
    deriv_report = check(delta, "derivation")
    if not deriv_report.passed:
        raise InternalVerificationError(
            "derivation part fails the derivation identity", deriv_report
        )
    if not bimodule_center(bim).contains(central):
        raise InternalVerificationError("image of 1 is not central", central)
    m = ring.m
    for basis in basis_elements(ring):
        lhs = dmap.apply(basis)
        rhs = delta.apply(basis)
        shift = act_left(bim, basis.coords, central)
        if any((x - y - z) % m for x, y, z in zip(lhs, rhs, shift)):
            raise InternalVerificationError("recomposition failed", basis)
    return DecompositionTrace(e, f, m_elt, delta, d, central)


# ---------------------------------------------------------------------------
# Step-by-step verification of the corner-peeling argument
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StepResult:
    step: int
    passed: bool
    witness: dict | None = None

    def to_json(self):
        return {"step": self.step, "passed": self.passed, "witness": self.witness}


@dataclass(frozen=True)
class ProofStepsReport:
    steps: tuple

    @property
    def all_passed(self):
        return all(s.passed for s in self.steps)

    def to_json(self):
        return {
            "all_passed": self.all_passed,
            "steps": [s.to_json() for s in self.steps],
        }


def verify_proof_steps(dmap, pair_mode="structured"):
    """Check the eight intermediate identities of the corner-peeling argument
    for Delta = D - I_m.

    Steps 1-3 localize Delta on the four corners cut out by E = E11 and
    F = 1 - E; steps 4-6 and 8 are corner-weighted product rules; step 7 says
    Delta(1) is central.  Single-element identities run over the module basis,
    bilinear ones over ordered basis pairs.
    """
    ring = dmap.domain
    bim = dmap.codomain
    if ring.kind != "matrix":
        raise ValueError("proof steps are defined over a matrix ring domain")
    report = check(dmap, "star", pair_mode=pair_mode)
    if not report.passed:
        raise PreconditionError(
            "map does not satisfy the zero-product condition", report
        )
    m = ring.m
    e = matrix_unit(ring, 1, 1)
    f = one_element(ring) - e
    one = one_element(ring)
    m_elt = _corner_element(bim, e, f, dmap.apply(e))
    delta = dmap - inner_derivation(bim, m_elt)

    def dl(x):
        return delta.apply(x)

    def lact(x, v):
        return act_left(bim, x.coords, v)

    def ract(v, x):
        return act_right(bim, v, x.coords)

    def sandwich(x, v, y):
        return lact(x, ract(v, y))

    def combine(lhs, ta, tb, corr):
        return tuple(
            (w - x - y + z) % m for w, x, y, z in zip(lhs, ta, tb, corr)
        )

    def corner_identity(x, y):
        # Delta(x a y) lands in the (x, y) corner.
        def fn(a, _b=None):
            w = x * a * y
            img = dl(w)
            return tuple(
                (u - v) % m for u, v in zip(img, sandwich(x, img, y))
            )

        return fn

    def corner_rule(out_l, out_r, mk_p, mk_q, mk_corr):
        # out_l Delta(p q) out_r = out_l Delta(p) q + p Delta(q) out_r - corr
        # with corr = cx Delta(cy) cz.
        def fn(a, b):
            p = mk_p(a, b)
            q = mk_q(a, b)
            lhs = sandwich(out_l, dl(p * q), out_r)
            ta = lact(out_l, ract(dl(p), q))
            tb = lact(p, ract(dl(q), out_r))
            cx, cy, cz = mk_corr(p, q)
            corr = lact(cx, ract(dl(cy), cz))
            return combine(lhs, ta, tb, corr)

        return fn

    def central_identity(a, _b=None):
        img = dl(one)
        return tuple((x - y) % m for x, y in zip(lact(a, img), ract(img, a)))

    step_parts = {
        1: [
            ("corner_ee", 1, corner_identity(e, e)),
            ("corner_ff", 1, corner_identity(f, f)),
        ],
        2: [("corner_ef", 1, corner_identity(e, f))],
        3: [("corner_fe", 1, corner_identity(f, e))],
        4: [
            (
                "rule_ee_ef",
                2,
                corner_rule(
                    e, f,
                    lambda a, b: e * a * e,
                    lambda a, b: e * b * f,
                    lambda p, q: (p * q, f, f),
                ),
            ),
            (
                "rule_ef_ff",
                2,
                corner_rule(
                    e, f,
                    lambda a, b: e * a * f,
                    lambda a, b: f * b * f,
                    lambda p, q: (p, f, q),
                ),
            ),
        ],
        5: [
            (
                "rule_fe_ee",
                2,
                corner_rule(
                    f, e,
                    lambda a, b: f * a * e,
                    lambda a, b: e * b * e,
                    lambda p, q: (f, f, p * q),
                ),
            ),
            (
                "rule_ff_fe",
                2,
                corner_rule(
                    f, e,
                    lambda a, b: f * a * f,
                    lambda a, b: f * b * e,
                    lambda p, q: (p, f, q),
                ),
            ),
        ],
        6: [
            (
                "rule_ee_ee",
                2,
                corner_rule(
                    e, e,
                    lambda a, b: e * a * e,
                    lambda a, b: e * b * e,
                    lambda p, q: (p, e, q),
                ),
            ),
            (
                "rule_ff_ff",
                2,
                corner_rule(
                    f, f,
                    lambda a, b: f * a * f,
                    lambda a, b: f * b * f,
                    lambda p, q: (p, f, q),
                ),
            ),
        ],
        7: [("central_image_of_one", 1, central_identity)],
        8: [
            (
                "rule_ef_fe",
                2,
                corner_rule(
                    e, e,
                    lambda a, b: e * a * f,
                    lambda a, b: f * b * e,
                    lambda p, q: (p * q, e, e),
                ),
            ),
            (
                "rule_fe_ef",
                2,
                corner_rule(
                    f, f,
                    lambda a, b: f * b * e,
                    lambda a, b: e * a * f,
                    lambda p, q: (f, f, p * q),
                ),
            ),
        ],
    }

    basis = basis_elements(ring)
    steps = []
    for step_no in range(1, 9):
        failure = None
        for label, arity, fn in step_parts[step_no]:
            if failure:
                break
            if arity == 1:
                for a in basis:
                    res = fn(a)
                    if any(res):
                        failure = {
                            "part": label,
                            "a": a.to_json(),
                            "b": None,
                            "residual": list(res),
                        }
                        break
            else:
                for a in basis:
                    if failure:
                        break
                    for b in basis:
                        res = fn(a, b)
                        if any(res):
                            failure = {
                                "part": label,
                                "a": a.to_json(),
                                "b": b.to_json(),
                                "residual": list(res),
                            }
                            break
        steps.append(StepResult(step_no, failure is None, failure))
    return ProofStepsReport(tuple(steps))


# ---------------------------------------------------------------------------
# Derivations of matrix rings: inner part plus entrywise lift
# ---------------------------------------------------------------------------

def decompose_inner_plus_lifted(delta):
    """Split a derivation of an n x n matrix ring (into matrices over a base
    bimodule) as an entrywise lift of a base derivation plus an inner
    derivation.

    G is any solution of the linear system {(delta - I_G)(E_ij) = 0 over all
    matrix units}; the remainder delta - I_G is verified to be supported
    entrywise and to be the lift of the base map d it determines.  Returns
    (d, G).  G is only canonical up to a central summand, so callers should
    compare inner derivations at the map level.
    """
    ring = delta.domain
    bim = delta.codomain
    if ring.kind != "matrix":
        raise ValueError("the inner-plus-lift split needs a matrix ring domain")
    report = check(delta, "derivation")
    if not report.passed:
        raise PreconditionError("map is not a derivation", report)
    if bim.kind == "regular":
        base_bim = Bimodule.regular(ring.base)
    elif bim.kind == "matrix_over":
        base_bim = bim.base
    else:
        raise ValueError("codomain must be matrices over a base bimodule")
    n = ring.n
    m = ring.m
    rank_m = bimodule_rank(bim)
    rn = bimodule_rank(base_bim)
    rb = ring_rank(ring.base)
    rows = []
    rhs = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            unit = matrix_unit(ring, i, j)
            lmat = left_action_matrix(bim, unit.coords)
            rmat = right_action_matrix(bim, unit.coords)
            img = delta.apply(unit)
            for t in range(rank_m):
                rows.append([(lmat[t][k] - rmat[t][k]) % m for k in range(rank_m)])
                rhs.append(img[t])
    particular, _ = solve_affine(ResidueMatrix.from_rows(m, rows), rhs)
    if particular is None:
        raise InternalVerificationError(
            "no inner derivation matches the map on all matrix units", delta
        )
    g = particular
    remainder = delta - inner_derivation(bim, g)
    # Entrywise support: the image of x placed in cell (i, j) must live in
    # cell (i, j), and all cells must carry the same base map.
    for cell in range(n * n):
        for v in range(rb):
            idx = cell * rb + v
            img = remainder.apply(
                tuple(1 if k == idx else 0 for k in range(ring_rank(ring)))
            )
            for t, val in enumerate(img):
                if val and t // rn != cell:
                    raise InternalVerificationError(
                        "remainder is not entrywise supported", (cell, v, img)
                    )
    d_rows = [[0] * rb for _ in range(rn)]
    for v in range(rb):
        img = remainder.apply(tuple(1 if k == v else 0 for k in range(ring_rank(ring))))
        for t in range(rn):
            d_rows[t][v] = img[t]
    d = AdditiveMap(ring.base, base_bim, ResidueMatrix.from_rows(m, d_rows))
    base_report = check(d, "derivation")
    if not base_report.passed:
        raise InternalVerificationError(
            "entrywise part is not a base derivation", base_report
        )
    # lift_map infers its own codomain; rebind to the input's bimodule (the
    # coordinate layouts coincide) so the recomposition compares like with like
    lifted = AdditiveMap(ring, bim, lift_map(d, n).matrix)
    if (lifted + inner_derivation(bim, g)).matrix != delta.matrix:
        raise InternalVerificationError("lift-plus-inner recomposition failed", d)
    return d, g


# ---------------------------------------------------------------------------
# Component split of maps on the square-zero extension
# ---------------------------------------------------------------------------

def decompose_trivial_extension(dmap):
    """Four component maps of a self-map of the square-zero extension, split
    along the canonical (first, second)-component basis.

    When the input passes the Jordan check over an odd modulus, the component
    conclusions are re-verified: the diagonal components satisfy the Jordan
    identity, the upper mixed component vanishes, and the lower diagonal
    differs from the upper one by right multiplication by a central element.
    """
    ring = dmap.domain
    if ring.kind != "trivial_ext":
        raise ValueError("component split needs a trivial-extension domain")
    if dmap.codomain != Bimodule.regular(ring):
        raise ValueError("component split is defined for self-maps of the extension")
    base = ring.base
    ra = ring_rank(base)
    mat = dmap.matrix
    m = ring.m

    def block(r0, c0):
        rows = [[mat.entry(r0 + u, c0 + v) for v in range(ra)] for u in range(ra)]
        return AdditiveMap(base, Bimodule.regular(base), ResidueMatrix.from_rows(m, rows))

    d1, d2 = block(0, 0), block(0, ra)
    d3, d4 = block(ra, 0), block(ra, ra)
    if m % 2 == 1 and check(dmap, "jordan").passed:
        for label, comp in (("first_diagonal", d1), ("second_to_ideal", d3)):
            rep = check(comp, "jordan")
            if not rep.passed:
                raise InternalVerificationError(
                    f"{label} component fails the Jordan identity", rep
                )
        if not d2.is_zero():
            raise InternalVerificationError(
                "ideal-to-first component is nonzero", d2
            )
        c = d4.apply(one_element(base))
        if not bimodule_center(Bimodule.regular(base)).contains(c):
            raise InternalVerificationError("component gap at 1 is not central", c)
        if (d4 - d1).matrix != right_multiplier(Bimodule.regular(base), c).matrix:
            raise InternalVerificationError(
                "lower diagonal is not the upper one plus a right multiplier", c
            )
    return d1, d2, d3, d4


# ---------------------------------------------------------------------------
# Component split over non-unital codomains
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComponentCheck:
    name: str
    passed: bool
    witness: dict | None = None

    def to_json(self):
        return {"name": self.name, "passed": self.passed, "witness": self.witness}


@dataclass(frozen=True)
class PeirceReport:
    components: tuple  # (D1, D2, D3, D4) additive maps
    checks: tuple

    @property
    def all_passed(self):
        return all(c.passed for c in self.checks)

    def to_json(self):
        return {
            "all_passed": self.all_passed,
            "checks": [c.to_json() for c in self.checks],
        }


def peirce_component_check(dmap):
    """Split a Jordan map into a non-unital codomain along the two-sided
    identity action and check the component identities and their b = 1
    conclusions: the two one-sided components are multiplications by the
    images of 1 and the doubly-degenerate component vanishes (this is where
    2-torsion freeness is used, so even moduli are rejected)."""
    ring = dmap.domain
    bim = dmap.codomain
    if bim.kind != "inflated":
        raise ValueError("the component check targets non-unital (inflated) codomains")
    require_odd(ring, "the component-split conclusions")
    rep = check(dmap, "jordan")
    if not rep.passed:
        raise PreconditionError("map does not satisfy the Jordan identity", rep)
    m = ring.m
    rank = bimodule_rank(bim)
    one = structure(ring).one
    lmat = left_action_matrix(bim, one)
    rmat = right_action_matrix(bim, one)
    p1 = [
        [sum(lmat[i][k] * rmat[k][j] for k in range(rank)) % m for j in range(rank)]
        for i in range(rank)
    ]
    p2 = [[(lmat[i][j] - p1[i][j]) % m for j in range(rank)] for i in range(rank)]
    p3 = [[(rmat[i][j] - p1[i][j]) % m for j in range(rank)] for i in range(rank)]
    p4 = [
        [
            ((1 if i == j else 0) - lmat[i][j] - rmat[i][j] + p1[i][j]) % m
            for j in range(rank)
        ]
        for i in range(rank)
    ]

    def project(proj):
        rows = [
            [
                sum(proj[t][k] * dmap.matrix.entry(k, v) for k in range(rank)) % m
                for v in range(ring_rank(ring))
            ]
            for t in range(rank)
        ]
        return AdditiveMap(ring, bim, ResidueMatrix.from_rows(m, rows))

    comps = tuple(project(p) for p in (p1, p2, p3, p4))
    d1, d2, d3, d4 = comps
    one_el = one_element(ring)

    def lv(x, v):
        return act_left(bim, x.coords, v)

    def rv(v, x):
        return act_right(bim, v, x.coords)

    def msub(*vs):
        acc = list(vs[0])
        for v in vs[1:]:
            acc = [(x - y) % m for x, y in zip(acc, v)]
        return tuple(acc)

    def pair_check(name, fn):
        for a in basis_elements(ring):
            for b in basis_elements(ring):
                res = fn(a, b)
                if any(res):
                    return ComponentCheck(
                        name,
                        False,
                        {"a": a.to_json(), "b": b.to_json(), "residual": list(res)},
                    )
        return ComponentCheck(name, True)

    def single_check(name, fn):
        for a in basis_elements(ring):
            res = fn(a)
            if any(res):
                return ComponentCheck(
                    name, False, {"a": a.to_json(), "b": None, "residual": list(res)}
                )
        return ComponentCheck(name, True)

    def jordan_of(comp):
        def fn(a, b):
            s = (a * b) + (b * a)
            return msub(
                comp.apply(s),
                rv(comp.apply(a), b),
                lv(a, comp.apply(b)),
                rv(comp.apply(b), a),
                lv(b, comp.apply(a)),
            )

        return fn

    checks = (
        pair_check("unital_component_jordan", jordan_of(d1)),
        pair_check(
            "left_degenerate_rule",
            lambda a, b: msub(
                d2.apply((a * b) + (b * a)), lv(a, d2.apply(b)), lv(b, d2.apply(a))
            ),
        ),
        pair_check(
            "right_degenerate_rule",
            lambda a, b: msub(
                d3.apply((a * b) + (b * a)), rv(d3.apply(a), b), rv(d3.apply(b), a)
            ),
        ),
        pair_check(
            "outer_component_jordan_zero",
            lambda a, b: d4.apply((a * b) + (b * a)),
        ),
        single_check(
            "left_degenerate_is_multiplier",
            lambda a: msub(d2.apply(a), lv(a, d2.apply(one_el))),
        ),
        single_check(
            "right_degenerate_is_multiplier",
            lambda a: msub(d3.apply(a), rv(d3.apply(one_el), a)),
        ),
        single_check("outer_component_vanishes", lambda a: d4.apply(a)),
    )
    return PeirceReport(comps, checks)
