"""Root data for reductive groups in exact rational coordinates.

Characters and cocharacters live in dual copies of Q^m with the standard dot
pairing.  Classical families use their Euclidean realizations (so lattice
generators like (1,0,...,0) or 1/2(1,...,1) are literal vectors); exceptional
types use the basis of simple coroots, so character coordinates there are
fundamental-weight coordinates.

Central quotients are realized by enlarging the cocharacter lattice with
rational generators, never by changing basis.  For type A the ambient space
keeps the direction (1,...,1); it is recorded in ``central_cochars`` and all
characters are required to be orthogonal to it, which makes the pairing with
any representative of a quotient cocharacter well defined.

The Killing form is computed from its definition (x,y) = sum_a a(x)a(y) over
all roots; the inverse form on the character side is obtained by inverting the
Gram matrix on the coroot span, exactly.  No normalization tables are used.
"""

from fractions import Fraction
from functools import cached_property
from math import factorial

from .errors import SpecificationError, GuardExceededError
from . import ratlin as rl
from .ratlin import vec, add, sub, neg, scale, dot, is_zero

_CHAIN_CARTAN = {
    # exceptional types as adjacency lists (Bourbaki numbering, 0-based)
    "E6": [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)],
    "E7": [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 3)],
    "E8": [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)],
}

_F4_CARTAN = [
    [2, -1, 0, 0],
    [-1, 2, -2, 0],
    [0, -1, 2, -1],
    [0, 0, -1, 2],
]

_G2_CARTAN = [
    [2, -1],
    [-3, 2],
]

_WEYL_ORDER = {
    "E6": 51840,
    "E7": 2903040,
    "E8": 696729600,
    "F4": 1152,
    "G2": 12,
}


class Factor:
    """One simple factor: indices of its simple roots plus its type label."""

    def __init__(self, indices, family, rank):
        self.indices = tuple(indices)
        self.family = family
        self.rank = rank

    @property
    def label(self):
        return f"{self.family}{self.rank}"

    def __repr__(self):
        return f"Factor({self.label}, indices={self.indices})"


class RootDatum:
    """A root datum (X^*, R, X_*, R_v) with an explicit cocharacter lattice.

    Parameters
    ----------
    simple_roots : sequence of vectors (character coordinates)
    simple_coroots : sequence of vectors (cocharacter coordinates)
    cochar_basis : rows spanning X_*(T); rational entries allowed
    central_cochars : ambient directions modded out of the cocharacter side
        (type A realizations); characters must annihilate them
    """

    def __init__(self, simple_roots, simple_coroots, cochar_basis,
                 central_cochars=(), label=""):
        self.simple_roots = tuple(vec(r) for r in simple_roots)
        self.simple_coroots = tuple(vec(c) for c in simple_coroots)
        self.cochar_basis = tuple(vec(b) for b in cochar_basis)
        self.central_cochars = tuple(vec(z) for z in central_cochars)
        self.label = label
        if len(self.simple_roots) != len(self.simple_coroots):
            raise SpecificationError("roots and coroots must come in pairs")
        self.dim = len(self.simple_roots[0]) if self.simple_roots else (
            len(self.cochar_basis[0]) if self.cochar_basis else 0)
        for v in (*self.simple_roots, *self.simple_coroots,
                  *self.cochar_basis, *self.central_cochars):
            if len(v) != self.dim:
                raise SpecificationError("inconsistent ambient dimensions")
        a = self.cartan_matrix
        for i in range(len(a)):
            if a[i][i] != 2:
                raise SpecificationError("diagonal Cartan entry != 2")
        if rl.rank(self.cochar_basis) != len(self.cochar_basis):
            raise SpecificationError("cocharacter basis is not independent")
        for c in self.simple_coroots:
            if not rl.in_lattice(self.cochar_basis, c):
                raise SpecificationError(
                    "cocharacter lattice does not contain the coroot lattice")

    # ------------------------------------------------------------------
    # basic structure

    @cached_property
    def cartan_matrix(self):
        return tuple(tuple(dot(a, c) for c in self.simple_coroots)
                     for a in self.simple_roots)

    @cached_property
    def factors(self):
        """Simple factors as connected components of the Dynkin diagram."""
        n = len(self.simple_roots)
        a = self.cartan_matrix
        seen = [False] * n
        comps = []
        for s in range(n):
            if seen[s]:
                continue
            comp = []
            stack = [s]
            seen[s] = True
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in range(n):
                    if not seen[j] and a[i][j] != 0:
                        seen[j] = True
                        stack.append(j)
            comp.sort()
            fam = self._classify(comp)
            comps.append(Factor(comp, fam, len(comp)))
        return tuple(comps)

    def _classify(self, comp):
        a = self.cartan_matrix
        r = len(comp)
        if r == 1:
            return "A"
        pairs = [(i, j) for i in comp for j in comp
                 if i < j and a[i][j] != 0]
        mults = {(i, j): a[i][j] * a[j][i] for (i, j) in pairs}
        maxmult = max(mults.values())
        if maxmult == 3:
            return "G"
        if maxmult == 2:
            if r == 4:
                (i, j) = next(p for p, m in mults.items() if m == 2)
                deg = {k: sum(1 for l in comp if l != k and a[k][l] != 0)
                       for k in comp}
                if deg[i] == 2 and deg[j] == 2:
                    return "F"
            # B vs C by the length of the last-listed simple root; relative
            # lengths follow from a_ij/a_ji = |alpha_i|^2/|alpha_j|^2,
            # propagated along the (connected) diagram
            norms = {comp[0]: Fraction(1)}
            changed = True
            while changed:
                changed = False
                for (i, j) in pairs:
                    if i in norms and j not in norms:
                        norms[j] = norms[i] * a[j][i] / a[i][j]
                        changed = True
                    elif j in norms and i not in norms:
                        norms[i] = norms[j] * a[i][j] / a[j][i]
                        changed = True
            long_norm = max(norms.values())
            return "B" if norms[comp[-1]] < long_norm else "C"
        deg = {k: sum(1 for l in comp if l != k and a[k][l] != 0)
               for k in comp}
        if max(deg.values()) <= 2:
            return "A"
        branch = next(k for k in comp if deg[k] == 3)
        legs = sorted(self._leg_lengths(comp, branch))
        if legs[:2] == [1, 1]:
            return "D"
        return "E"

    def _leg_lengths(self, comp, branch):
        a = self.cartan_matrix
        lens = []
        for nb in comp:
            if nb == branch or a[branch][nb] == 0:
                continue
            length, prev, cur = 1, branch, nb
            while True:
                nxt = [k for k in comp
                       if k not in (prev, cur) and a[cur][k] != 0]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            lens.append(length)
        return lens

    @cached_property
    def central_torus_rank(self):
        """Rank of the connected center as a torus of the group itself.

        Quotiented ambient directions (type A realizations) that lie in the
        span of the cocharacter lattice do not count.
        """
        central = len(self.cochar_basis) - len(self.simple_coroots)
        base = rl.rank(self.cochar_basis)
        for z in self.central_cochars:
            if rl.rank(tuple(self.cochar_basis) + (z,)) == base:
                central -= 1
        return central

    @cached_property
    def lie_type(self):
        """List of (family, rank) simple factors plus the central torus rank."""
        fams = [(f.family, f.rank) for f in self.factors]
        return fams, self.central_torus_rank

    @cached_property
    def positive_roots(self):
        """Positive roots paired with their coroots, by reflection closure."""
        found = {}
        queue = list(zip(self.simple_roots, self.simple_coroots))
        for root, coroot in queue:
            found[root] = coroot
        while queue:
            beta, beta_v = queue.pop()
            for alpha, alpha_v in zip(self.simple_roots, self.simple_coroots):
                k = dot(beta, alpha_v)
                gamma = sub(beta, scale(k, alpha))
                if gamma in found:
                    continue
                coords = self.root_span_coords(gamma)
                if coords is None or not all(c >= 0 for c in coords):
                    continue
                gamma_v = sub(beta_v, scale(dot(alpha, beta_v), alpha_v))
                found[gamma] = gamma_v
                queue.append((gamma, gamma_v))
        return tuple(found.items())

    @cached_property
    def num_positive_roots(self):
        return len(self.positive_roots)

    @cached_property
    def delta(self):
        """Half-sum of the positive roots."""
        total = rl.zero(self.dim)
        for root, _ in self.positive_roots:
            total = add(total, root)
        return scale(Fraction(1, 2), total)

    @cached_property
    def _root_coord_solver(self):
        # left inverse of the simple-root matrix: coords = P v on the root span
        s = self.simple_roots
        gram = tuple(tuple(dot(a, b) for b in s) for a in s)
        return rl.mat_mul(rl.mat_inv(gram), s)

    def root_span_coords(self, v, check=True):
        """Coordinates of v in the simple-root basis, or None if off the span."""
        coords = rl.mat_vec(self._root_coord_solver, v)
        if check:
            recon = rl.zero(self.dim)
            for c, a in zip(coords, self.simple_roots):
                recon = add(recon, scale(c, a))
            if recon != tuple(v):
                return None
        return coords

    def factor_of_root_index(self, i):
        for fi, f in enumerate(self.factors):
            if i in f.indices:
                return fi
        raise SpecificationError(f"no factor contains simple root {i}")

    @cached_property
    def _roots_by_factor(self):
        buckets = [[] for _ in self.factors]
        index_of = {}
        for fi, f in enumerate(self.factors):
            for i in f.indices:
                index_of[i] = fi
        for root, coroot in self.positive_roots:
            coords = self.root_span_coords(root, check=False)
            fi = index_of[next(i for i, c in enumerate(coords) if c != 0)]
            buckets[fi].append((root, coroot))
        return tuple(tuple(b) for b in buckets)

    def roots_of_factor(self, fi):
        return self._roots_by_factor[fi]

    def factor_dim(self, fi):
        """dim of the simple factor: rank + number of its roots."""
        return self.factors[fi].rank + 2 * len(self.roots_of_factor(fi))

    @cached_property
    def dim_g(self):
        return (2 * self.num_positive_roots + len(self.simple_roots)
                + self.central_torus_rank)

    # ------------------------------------------------------------------
    # pairings and forms

    def pairing(self, mu, nu):
        return dot(mu, nu)

    @cached_property
    def _factor_gram_inv(self):
        """Inverse Killing Gram matrix on each factor's simple coroots."""
        out = []
        for f in self.factors:
            coroots = [self.simple_coroots[i] for i in f.indices]
            gram = []
            for ca in coroots:
                row = []
                for cb in coroots:
                    s = Fraction(0)
                    for root, _ in self.positive_roots:
                        s += 2 * dot(root, ca) * dot(root, cb)
                    row.append(s)
                gram.append(tuple(row))
            out.append(rl.mat_inv(tuple(gram)))
        return tuple(out)

    def weight_inner(self, mu1, mu2, factor=None):
        """Canonical bilinear form (inverse Killing) on the character side.

        With ``factor`` given, only that simple factor's component is used;
        otherwise the value is summed over all simple factors.  Components
        along the central directions do not contribute.
        """
        factors = range(len(self.factors)) if factor is None else [factor]
        total = Fraction(0)
        for fi in factors:
            idx = self.factors[fi].indices
            w1 = [dot(mu1, self.simple_coroots[i]) for i in idx]
            w2 = [dot(mu2, self.simple_coroots[i]) for i in idx]
            ginv = self._factor_gram_inv[fi]
            total += sum(w1[a] * ginv[a][b] * w2[b]
                         for a in range(len(idx)) for b in range(len(idx)))
        return total

    def cochar_norm_sq(self, nu, factor=None):
        """Killing norm |nu|^2 = sum over roots of <alpha, nu>^2."""
        key = (tuple(nu), factor)
        cache = self.__dict__.setdefault("_norm_cache", {})
        if key not in cache:
            if factor is None:
                roots = self.positive_roots
            else:
                roots = self.roots_of_factor(factor)
            cache[key] = 2 * sum(dot(root, nu) ** 2 for root, _ in roots)
        return cache[key]

    def dual_coxeter_number(self, factor):
        """1/|alpha|^2 for a long root, in Killing normalization."""
        roots = self.roots_of_factor(factor)
        if not roots:
            raise SpecificationError("empty factor")
        long_sq = max(self.weight_inner(r, r, factor=factor) for r, _ in roots)
        h = 1 / long_sq
        if h.denominator != 1:
            raise SpecificationError("dual Coxeter number came out non-integral")
        return int(h)

    # ------------------------------------------------------------------
    # dominance and the Weyl group

    def is_dominant(self, mu):
        return all(dot(mu, c) >= 0 for c in self.simple_coroots)

    def dominant_conjugate(self, mu):
        """The dominant Weyl conjugate of mu, with the sign of the chamber map."""
        cur = tuple(vec(mu))
        sign = 1
        while True:
            for alpha, alpha_v in zip(self.simple_roots, self.simple_coroots):
                k = dot(cur, alpha_v)
                if k < 0:
                    cur = sub(cur, scale(k, alpha))
                    sign = -sign
                    break
            else:
                return cur, sign

    @cached_property
    def two_delta_coroot(self):
        """Sum of the positive coroots."""
        total = rl.zero(self.dim)
        for _, coroot in self.positive_roots:
            total = add(total, coroot)
        return total

    @cached_property
    def minus_w0_matrix(self):
        """The involution -w0 as a matrix on character coordinates.

        Found once by recording the reflection sequence that carries -delta
        back to the dominant chamber (that sequence is w0); mu is self-dual
        iff this matrix fixes mu.
        """
        seq = []
        cur = neg(self.delta)
        while True:
            for i, alpha_v in enumerate(self.simple_coroots):
                k = dot(cur, alpha_v)
                if k < 0:
                    cur = sub(cur, scale(k, self.simple_roots[i]))
                    seq.append(i)
                    break
            else:
                break
        cols = []
        for j in range(self.dim):
            v = rl.unit(self.dim, j)
            for i in seq:
                v = sub(v, scale(dot(v, self.simple_coroots[i]),
                                 self.simple_roots[i]))
            cols.append(neg(v))
        return tuple(zip(*cols))

    def is_self_dual(self, mu):
        """w0 mu = -mu, via the cached -w0 matrix."""
        mu = tuple(vec(mu))
        return rl.mat_vec(self.minus_w0_matrix, mu) == mu

    @cached_property
    def weyl_order(self):
        order = 1
        for f in self.factors:
            r = f.rank
            if f.family == "A":
                order *= factorial(r + 1)
            elif f.family in ("B", "C"):
                order *= 2 ** r * factorial(r)
            elif f.family == "D":
                order *= 2 ** (r - 1) * factorial(r)
            else:
                order *= _WEYL_ORDER[f.label]
        return order

    def weyl_orbit_signed(self, v, guard=None):
        """The Weyl orbit of a strictly dominant v as a dict vector -> sign.

        Only valid for regular v (trivial stabilizer), which is all the
        alternating Weyl-sum oracle needs.
        """
        if guard is not None and self.weyl_order > guard:
            raise GuardExceededError(
                f"Weyl group order {self.weyl_order} exceeds guard {guard}")
        v = tuple(vec(v))
        orbit = {v: 1}
        queue = [v]
        while queue:
            cur = queue.pop()
            s = orbit[cur]
            for alpha, alpha_v in zip(self.simple_roots, self.simple_coroots):
                k = dot(cur, alpha_v)
                if k == 0:
                    raise SpecificationError("weyl_orbit_signed needs regular input")
                nxt = sub(cur, scale(k, alpha))
                if nxt not in orbit:
                    orbit[nxt] = -s
                    queue.append(nxt)
        return orbit

    def weyl_orbit(self, v):
        """Full Weyl orbit of any vector (character side)."""
        v = tuple(vec(v))
        orbit = {v}
        queue = [v]
        while queue:
            cur = queue.pop()
            for alpha, alpha_v in zip(self.simple_roots, self.simple_coroots):
                k = dot(cur, alpha_v)
                if k != 0:
                    nxt = sub(cur, scale(k, alpha))
                    if nxt not in orbit:
                        orbit.add(nxt)
                        queue.append(nxt)
        return orbit

    # ------------------------------------------------------------------
    # lattices

    def is_cocharacter(self, nu):
        return rl.in_lattice(self.cochar_basis, vec(nu))

    def assert_cocharacter(self, nu):
        if not self.is_cocharacter(nu):
            raise SpecificationError(f"{nu} is not in the cocharacter lattice")

    def project_character(self, mu):
        """Orthogonal projection of mu away from the central quotient directions.

        Characters of a quotient-realized group (type A) pair well-definedly
        with cocharacter representatives only through this projection.
        """
        mu = tuple(vec(mu))
        if not self.central_cochars:
            return mu
        z = self.central_cochars
        gram = tuple(tuple(dot(a, b) for b in z) for a in z)
        coeffs = rl.mat_vec(rl.mat_inv(gram), tuple(dot(mu, b) for b in z))
        for c, b in zip(coeffs, z):
            mu = sub(mu, scale(c, b))
        return mu

    def is_character(self, mu):
        mu = tuple(vec(mu))
        for z in self.central_cochars:
            if dot(mu, z) != 0:
                return False
        return all(dot(mu, b).denominator == 1 for b in self.cochar_basis)

    @cached_property
    def fundamental_weights(self):
        """Fundamental weights (in the derived group's span), per simple root."""
        ainv_blocks = {}
        out = []
        for i in range(len(self.simple_roots)):
            fi = self.factor_of_root_index(i)
            if fi not in ainv_blocks:
                idx = self.factors[fi].indices
                block = tuple(tuple(Fraction(self.cartan_matrix[a][b]))
                              for a in idx for b in ())  # placeholder
                block = tuple(tuple(Fraction(self.cartan_matrix[a][b]) for b in idx)
                              for a in idx)
                ainv_blocks[fi] = rl.mat_inv(block)
            idx = self.factors[fi].indices
            j = idx.index(i)
            row = ainv_blocks[fi][j]
            w = rl.zero(self.dim)
            for c, k in zip(row, idx):
                w = add(w, scale(c, self.simple_roots[k]))
            out.append(w)
        return tuple(out)

    @cached_property
    def center_directions(self):
        """Basis of the Lie-algebra center inside the span of X_*(T).

        These are the directions a genuine central torus of the group points
        in; characters of irreducible orthogonal representations must vanish
        on them.  Quotiented-out ambient directions are excluded.
        """
        # nullspace of the simple-root pairing restricted to span(cochar_basis)
        out = []
        rows = [tuple(dot(a, b) for a in self.simple_roots)
                for b in self.cochar_basis]
        # solve x . rows = 0 for combinations x of the cochar basis
        n = len(self.cochar_basis)
        system = rl.transpose(rows) if rows else ()
        # kernel of system (as matrix acting on x)
        kernel = _nullspace(system, n)
        for x in kernel:
            v = rl.zero(self.dim)
            for c, b in zip(x, self.cochar_basis):
                v = add(v, scale(c, b))
            if not is_zero(v):
                out.append(v)
        # drop components along the quotiented central directions
        if self.central_cochars:
            filtered = []
            for v in out:
                if rl.rank(tuple(self.central_cochars) + (v,)) > len(self.central_cochars):
                    filtered.append(v)
            out = filtered
        return tuple(out)

    @cached_property
    def _coroot_span_solver(self):
        """Inverse of the pairing matrix <alpha_i, alpha_j^v>."""
        r = len(self.simple_roots)
        a = tuple(tuple(dot(self.simple_roots[i], self.simple_coroots[j])
                        for j in range(r)) for i in range(r))
        return rl.mat_inv(a)

    def coroot_span_decomposition(self, nu):
        """Split nu = nu' + nu^z with nu' in the coroot span and nu^z central.

        The central component annihilates every root; the decomposition is
        found by exact linear algebra against the simple-coroot basis.
        """
        nu = tuple(vec(nu))
        cache = self.__dict__.setdefault("_span_cache", {})
        if nu in cache:
            return cache[nu]
        r = len(self.simple_roots)
        if r == 0:
            return rl.zero(self.dim), nu
        rhs = tuple(dot(self.simple_roots[i], nu) for i in range(r))
        x = rl.mat_vec(self._coroot_span_solver, rhs)
        prime = rl.zero(self.dim)
        for c, co in zip(x, self.simple_coroots):
            prime = add(prime, scale(c, co))
        out = (prime, sub(nu, prime))
        cache[nu] = out
        return out


def _nullspace(mat_rows, n):
    """Kernel basis of the linear map x -> x . mat (x of length n)."""
    if not mat_rows:
        return [rl.unit(n, i) for i in range(n)]
    # mat_rows: m rows of length n? here rows are length-n? transpose handling:
    # we receive the matrix with rows indexed by output coords; kernel of
    # x |-> mat_rows . x
    rows = [list(map(Fraction, r)) for r in mat_rows]
    ncols = n
    piv_cols = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_cols.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in piv_cols]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(piv_cols):
            v[pc] = -rows[i][fc]
        basis.append(tuple(v))
    return basis


# ----------------------------------------------------------------------
# construction

_ROOT_COUNTS = {"A": lambda r: r * (r + 1), "B": lambda r: 2 * r * r,
                "C": lambda r: 2 * r * r, "D": lambda r: 2 * r * (r - 1),
                "E6": lambda r: 72, "E7": lambda r: 126, "E8": lambda r: 240,
                "F4": lambda r: 48, "G2": lambda r: 12}


def simple_system(family, rank):
    """Simple roots/coroots of one simple type in its standard realization.

    Returns (roots, coroots, width, central) where width is the ambient
    dimension used and central is the quotiented direction for type A.
    """
    family = family.upper()
    e = rl.unit

    if family == "A":
        if rank < 1:
            raise SpecificationError("A requires rank >= 1")
        w = rank + 1
        roots = [sub(e(w, i), e(w, i + 1)) for i in range(rank)]
        return roots, list(roots), w, (Fraction(1),) * w
    if family == "B":
        if rank < 1:
            raise SpecificationError("B requires rank >= 1")
        w = rank
        roots = [sub(e(w, i), e(w, i + 1)) for i in range(rank - 1)] + [e(w, rank - 1)]
        coroots = [sub(e(w, i), e(w, i + 1)) for i in range(rank - 1)] + [scale(2, e(w, rank - 1))]
        return roots, coroots, w, None
    if family == "C":
        if rank < 1:
            raise SpecificationError("C requires rank >= 1")
        w = rank
        roots = [sub(e(w, i), e(w, i + 1)) for i in range(rank - 1)] + [scale(2, e(w, rank - 1))]
        coroots = [sub(e(w, i), e(w, i + 1)) for i in range(rank - 1)] + [e(w, rank - 1)]
        return roots, coroots, w, None
    if family == "D":
        if rank < 2:
            raise SpecificationError("D requires rank >= 2")
        w = rank
        roots = [sub(e(w, i), e(w, i + 1)) for i in range(rank - 1)]
        roots.append(add(e(w, rank - 2), e(w, rank - 1)))
        return roots, list(roots), w, None
    if family == "E":
        if rank not in (6, 7, 8):
            raise SpecificationError("E requires rank 6, 7 or 8")
        cartan = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
        for (i, j) in _CHAIN_CARTAN[f"E{rank}"]:
            cartan[i][j] = cartan[j][i] = -1
        return _from_cartan(cartan)
    if family == "F":
        if rank != 4:
            raise SpecificationError("F requires rank 4")
        return _from_cartan(_F4_CARTAN)
    if family == "G":
        if rank != 2:
            raise SpecificationError("G requires rank 2")
        return _from_cartan(_G2_CARTAN)
    raise SpecificationError(f"unknown family {family!r}")


def _from_cartan(cartan):
    r = len(cartan)
    coroots = [rl.unit(r, i) for i in range(r)]
    roots = [vec(row) for row in cartan]
    return roots, coroots, r, None


def build_root_datum(lie_type, central_rank=0, label=""):
    """Construct the simply connected datum for a list of simple factors.

    ``lie_type`` is a list of (family, rank) pairs; ``central_rank`` adds a
    split central torus.  The cocharacter lattice is the coroot lattice plus
    the unit vectors of the central torus block.  Quotient lattices are built
    by replacing ``cochar_basis`` (see :func:`with_cochar_lattice`).
    """
    roots, coroots, centrals = [], [], []
    offset = 0
    widths = []
    for family, rank in lie_type:
        rts, crts, w, central = simple_system(family, rank)
        widths.append((offset, w, central))
        roots.extend(rts)
        coroots.extend(crts)
        offset += w
    total = offset + central_rank
    emb_roots, emb_coroots = [], []
    i = 0
    for (off, w, central), (family, rank) in zip(widths, lie_type):
        for _ in range(rank):
            emb_roots.append(_embed(roots[i], off, total))
            emb_coroots.append(_embed(coroots[i], off, total))
            i += 1
        if central is not None:
            centrals.append(_embed(central, off, total))
    basis = list(emb_coroots)
    for k in range(central_rank):
        basis.append(rl.unit(total, offset + k))
    return RootDatum(emb_roots, emb_coroots, basis, centrals, label=label)


def _embed(v, offset, total):
    out = [Fraction(0)] * total
    for i, x in enumerate(v):
        out[offset + i] = Fraction(x)
    return tuple(out)


def with_cochar_lattice(rd, basis, label=None):
    """Same roots/coroots, different cocharacter lattice."""
    return RootDatum(rd.simple_roots, rd.simple_coroots, basis,
                     rd.central_cochars, label=label or rd.label)


def expected_root_count(family, rank):
    key = family if family in ("A", "B", "C", "D") else f"{family}{rank}"
    return _ROOT_COUNTS[key](rank)
