"""Per-irreducible numerics: dimension, Casimir eigenvalue, self-dual and
orthogonal classification, weight multiplicities, and the combinatorial
quantities L_phi and s_phi.

The multiplicity table is the package's brute-force oracle: everything it
feeds (L_phi, s_phi, descent checks) is computed straight from the definition
with no closed forms, so it can cross-check the closed-form engine.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import lcm

from . import ratlin as rl
from .ratlin import add, sub, dot, scale
from .errors import SpecificationError, IntegralityError, GuardExceededError

FREUDENTHAL_GUARD_DEFAULT = 10 ** 6


def assert_dominant(rd, lam):
    if not rd.is_dominant(lam):
        raise SpecificationError(f"weight {lam} is not dominant")


def _weyl_dim_data(rd):
    """Integer-scaled positive coroots and the delta denominator product,
    so the Weyl dimension product runs on plain ints."""
    data = rd.__dict__.get("_weyl_dim_data")
    if data is None:
        corows = [coroot for _, coroot in rd.positive_roots]
        cden = lcm(*(x.denominator for row in corows for x in row))
        int_coroots = tuple(tuple(int(x * cden) for x in row) for row in corows)
        dden = lcm(*(x.denominator for x in rd.delta))
        delta_int = tuple(int(x * dden) for x in rd.delta)
        den = _prod(sum(a * b for a, b in zip(delta_int, c))
                    for c in int_coroots)
        data = (int_coroots, dden, den)
        rd.__dict__["_weyl_dim_data"] = data
    return data


def weyl_dim(rd, lam):
    """dim V_lam = prod over positive roots of <lam+delta, a_v>/<delta, a_v>."""
    assert_dominant(rd, lam)
    int_coroots, dden, den = _weyl_dim_data(rd)
    v = add(rl.vec(lam), rd.delta)
    vden = lcm(*(x.denominator for x in v))
    w = tuple(int(x * vden) for x in v)
    num = _prod(sum(a * b for a, b in zip(w, c)) for c in int_coroots)
    n = len(int_coroots)
    d = Fraction(num * dden ** n, den * vden ** n)
    if d.denominator != 1:
        raise IntegralityError(f"Weyl dimension of {lam} is not integral")
    return int(d)


def _prod(values):
    out = 1
    for v in values:
        out *= v
    return out


def two_delta_pairing(rd, lam):
    """<lam, 2 delta_v>, the pairing with the sum of positive coroots."""
    return dot(lam, rd.two_delta_coroot)


def casimir_value(rd, lam, factor=None):
    """Casimir eigenvalue (lam, lam + 2 delta) under the inverse Killing form,
    restricted to one simple factor when requested."""
    assert_dominant(rd, lam)
    lam = rl.vec(lam)
    two_delta = scale(2, rd.delta)
    return rd.weight_inner(lam, add(lam, two_delta), factor=factor)


@dataclass(frozen=True)
class RepClassification:
    self_dual: bool
    orthogonal: bool
    fs_parity: int  # parity of <lam, 2 delta_v>


def classify(rd, lam):
    """Self-dual iff the dominant conjugate of -lam is lam; orthogonal iff
    additionally <lam, 2 delta_v> is even."""
    assert_dominant(rd, lam)
    lam = rl.vec(lam)
    sd = rd.is_self_dual(lam)
    par = two_delta_pairing(rd, lam)
    if par.denominator != 1:
        raise IntegralityError(f"<lam, 2 delta_v> non-integral for {lam}")
    par = int(par) % 2
    return RepClassification(self_dual=sd, orthogonal=sd and par == 0,
                             fs_parity=par)


class _IntWeightEngine:
    """Exact weight combinatorics on integer-scaled vectors.

    All weights of V_lam lie in lam + (root lattice); scaling by the common
    denominator of lam and delta turns every reflection, dominance walk, and
    invariant-form evaluation into plain integer arithmetic, which is what
    makes the brute-force oracle usable at dimensions near 10^5.
    """

    def __init__(self, rd, lam):
        self.rd = rd
        denoms = [x.denominator for x in lam] + [x.denominator for x in rd.delta]
        self.scale = lcm(*denoms)
        s = self.scale
        self.lam = tuple(int(x * s) for x in lam)
        self.delta = tuple(int(x * s) for x in rd.delta)
        cd = lcm(*(x.denominator for co in rd.simple_coroots for x in co)) \
            if rd.simple_coroots else 1
        self.codenom = cd * s
        self.simple_coroots = tuple(tuple(int(x * cd) for x in co)
                                    for co in rd.simple_coroots)
        self.simple_roots = tuple(tuple(int(x) for x in a)
                                  for a in rd.simple_roots)
        self.pos_roots = tuple(tuple(int(x * s) for x in a)
                               for a, _ in rd.positive_roots)
        pos_coroots = tuple(tuple(int(x * cd) for x in co)
                            for _, co in rd.positive_roots)
        # W-invariant integer form B(x, y) = sum over positive coroots of
        # <x, b><y, b>; Freudenthal only needs it up to per-factor scaling
        dim = rd.dim
        self._form = [[sum(co[i] * co[j] for co in pos_coroots)
                       for j in range(dim)] for i in range(dim)]
        self._dom_memo = {}

    def pairing(self, mu, i):
        """s * <mu/s, alpha_i^v>, an integer multiple of s for lattice mu."""
        p = sum(a * b for a, b in zip(mu, self.simple_coroots[i]))
        q, r = divmod(p * self.scale, self.codenom)
        if r:
            raise IntegralityError("non-integral coroot pairing in weight walk")
        return q

    def is_dominant(self, mu):
        return all(sum(a * b for a, b in zip(mu, co)) >= 0
                   for co in self.simple_coroots)

    def dominant(self, mu):
        memo = self._dom_memo
        found = memo.get(mu)
        if found is not None:
            return found
        cur = mu
        trail = []
        while True:
            hit = memo.get(cur)
            if hit is not None:
                break
            for i, co in enumerate(self.simple_coroots):
                p = sum(a * b for a, b in zip(cur, co))
                if p < 0:
                    trail.append(cur)
                    k = self.pairing(cur, i) // self.scale
                    root = self.simple_roots[i]
                    step = k * self.scale
                    cur = tuple(x - step * a for x, a in zip(cur, root))
                    break
            else:
                hit = cur
                break
        for seen in trail:
            memo[seen] = hit
        memo[mu] = hit
        return hit

    def form(self, x, y):
        f = self._form
        n = len(x)
        return sum(x[i] * sum(f[i][j] * y[j] for j in range(n))
                   for i in range(n))

    def weight_set(self):
        """Saturated weight set below lam by simple-root subtraction, pruned
        to the dominance polytope lam - (nonnegative root combinations)."""
        solver = self.rd._root_coord_solver
        sq = lcm(*(x.denominator for row in solver for x in row)) \
            if solver else 1
        int_solver = [tuple(int(x * sq) for x in row) for row in solver]
        unit = sq * self.scale
        lam = self.lam
        steps = [tuple(self.scale * a for a in root) for root in self.simple_roots]

        def inside(mu):
            dom = self.dominant(mu)
            v = tuple(a - b for a, b in zip(lam, dom))
            for row in int_solver:
                c = sum(a * b for a, b in zip(row, v))
                if c < 0 or c % unit:
                    return False
            return True

        seen = {lam}
        queue = [lam]
        while queue:
            mu = queue.pop()
            for step in steps:
                nxt = tuple(a - b for a, b in zip(mu, step))
                if nxt in seen or not inside(nxt):
                    continue
                seen.add(nxt)
                queue.append(nxt)
        return seen

    def unscale(self, mu):
        s = self.scale
        return tuple(Fraction(x, s) for x in mu)


class WeightMultiplicityTable:
    """All weights of V_lam with multiplicities, from Freudenthal's recursion.

    Multiplicities are stored on dominant representatives only and expanded
    through Weyl invariance on access; weights are kept as integer-scaled
    tuples internally (see :class:`_IntWeightEngine`).
    """

    def __init__(self, engine, highest, dominant_mults, all_weights):
        self._engine = engine
        self.rd = engine.rd
        self.highest = engine.unscale(highest)
        self._dom = dominant_mults      # scaled dominant weight -> multiplicity
        self._weights = all_weights     # frozenset of every scaled weight

    def _scaled(self, mu):
        s = self._engine.scale
        mu = rl.vec(mu)
        out = []
        for x in mu:
            y = x * s
            if y.denominator != 1:
                return None
            out.append(int(y))
        return tuple(out)

    def multiplicity(self, mu):
        key = self._scaled(mu)
        if key is None or key not in self._weights:
            return 0
        return self._dom[self._engine.dominant(key)]

    @cached_property
    def _full(self):
        dom = self._engine.dominant
        mults = self._dom
        return {w: mults[dom(w)] for w in self._weights}

    def items(self):
        """Pairs (weight, multiplicity) with weights as exact rationals."""
        unscale = self._engine.unscale
        for w, m in self._full.items():
            yield unscale(w), m

    def int_items(self):
        """Pairs (scale * weight, multiplicity) over integer tuples."""
        return self._full.items()

    @property
    def scale(self):
        return self._engine.scale

    def dominant_items(self):
        unscale = self._engine.unscale
        for w, m in self._dom.items():
            yield unscale(w), m

    @cached_property
    def total_dim(self):
        return sum(self._full.values())

    def __contains__(self, mu):
        key = self._scaled(mu)
        return key is not None and key in self._weights

    def __len__(self):
        return len(self._weights)


def freudenthal_multiplicities(rd, lam, guard=FREUDENTHAL_GUARD_DEFAULT):
    """Weight multiplicity table of V_lam via Freudenthal's recursion.

    Refuses representations with dim > ``guard`` (this is the oracle path;
    the closed-form engine has no such limit).
    """
    assert_dominant(rd, lam)
    lam = tuple(rl.vec(lam))
    dim = weyl_dim(rd, lam)
    if guard is not None and dim > guard:
        raise GuardExceededError(
            f"dim V = {dim} exceeds the multiplicity guard {guard}")

    eng = _IntWeightEngine(rd, lam)
    weights = frozenset(eng.weight_set())
    dominant = [w for w in weights if eng.is_dominant(w)]

    # recurse downward from lam ordered by the height of lam - mu in the
    # simple-root basis (every positive root has positive height)
    solver = rd._root_coord_solver
    height_fn = tuple(sum(col) for col in zip(*solver)) if solver else ()

    def height(mu):
        return sum(h * (a - b) for h, a, b in zip(height_fn, eng.lam, mu))

    dominant.sort(key=height)

    form = eng._form
    n = rd.dim
    form_alpha = [tuple(sum(form[i][j] * a[j] for j in range(n))
                        for i in range(n)) for a in eng.pos_roots]
    lam_delta = tuple(a + b for a, b in zip(eng.lam, eng.delta))
    lam_delta_sq = eng.form(lam_delta, lam_delta)
    mults = {}
    for mu in dominant:
        if mu == eng.lam:
            mults[mu] = 1
            continue
        num = 0
        for alpha, fa in zip(eng.pos_roots, form_alpha):
            cur = mu
            while True:
                cur = tuple(a + b for a, b in zip(cur, alpha))
                if cur not in weights:
                    break
                num += mults[eng.dominant(cur)] * sum(
                    a * b for a, b in zip(cur, fa))
        mu_delta = tuple(a + b for a, b in zip(mu, eng.delta))
        den = lam_delta_sq - eng.form(mu_delta, mu_delta)
        m, r = divmod(2 * num, den)
        if r != 0 or m <= 0:
            raise IntegralityError(
                f"Freudenthal multiplicity 2*{num}/{den} at {eng.unscale(mu)} "
                "is not a positive integer")
        mults[mu] = m
    table = WeightMultiplicityTable(eng, eng.lam, mults, weights)
    if table.total_dim != dim:
        raise IntegralityError(
            f"multiplicity total {table.total_dim} != Weyl dimension {dim}")
    return table


def _as_tables(mults):
    if isinstance(mults, WeightMultiplicityTable):
        return (mults,)
    return tuple(mults)


def _table_pair_sums(table, nu):
    """(sum of m<mu,nu> over <mu,nu> > 0, sum over all mu), exactly."""
    nu = rl.vec(nu)
    q = lcm(*(x.denominator for x in nu)) if nu else 1
    nu_int = tuple(int(x * q) for x in nu)
    unit = table.scale * q
    pos = total = 0
    for mu, m in table.int_items():
        p = sum(a * b for a, b in zip(mu, nu_int))
        total += m * p
        if p > 0:
            pos += m * p
    return Fraction(pos, unit), Fraction(total, unit)


def L_phi(rd, mults, nu):
    """L(nu) = sum over weights with <mu,nu> > 0 of m(mu) <mu,nu>."""
    total = Fraction(0)
    for table in _as_tables(mults):
        total += _table_pair_sums(table, nu)[0]
    if total.denominator != 1:
        raise IntegralityError(
            f"L(nu) = {total} is not an integer; nu is not a cocharacter "
            "of the group this representation lives on")
    return int(total)


def s_phi(rd, mults, nu):
    """s(nu) = sum over all weights of m(mu) <mu,nu> (the determinant weight)."""
    total = Fraction(0)
    for table in _as_tables(mults):
        total += _table_pair_sums(table, nu)[1]
    if total.denominator != 1:
        raise IntegralityError(f"s(nu) = {total} is not an integer")
    return int(total)


def dynkin_index(rd, lam):
    """dyn = 2 hv dim V chi(C) / dim g, for simple g."""
    fams, central = rd.lie_type
    if len(fams) != 1 or central != 0:
        raise SpecificationError("the Dynkin index needs a simple algebra")
    hv = rd.dual_coxeter_number(0)
    return 2 * hv * weyl_dim(rd, lam) * casimir_value(rd, lam) / rd.dim_g


def dynkin_index_orth(rd, lam):
    """Half the Dynkin index, defined for orthogonal reps with simple so(V)."""
    dim = weyl_dim(rd, lam)
    if dim in (1, 2, 4):
        raise SpecificationError(
            "orthogonal Dynkin index undefined for dim V in {1, 2, 4}")
    return dynkin_index(rd, lam) / 2
