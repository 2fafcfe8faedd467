"""Named group constructors with their traditional cocharacter lattices and
fundamental-group generators, plus the families' all-spinorial predicates and
known aspinorial witnesses.

Realizations (all exact, in ambient rational coordinates):

* ``SL_quot(n, d)`` — type A_{n-1} in Z^n with the all-ones direction
  quotiented; cocharacter lattice {x : sum x_i = 0 mod n/d} (plus that
  direction), generator (n/d, 0, ..., 0).
* ``GL(n)`` — type A_{n-1} with the full lattice Z^n and a genuine
  one-dimensional center; generator (1, 0, ..., 0).
* ``Sp_quot(n)`` — C_n with lattice Z^n + Z.(1/2)(1,...,1).
* ``SO(m)`` / ``Spin(m)`` / ``PSO(2n)`` — types B/D with lattices Z^n,
  the coroot lattice, and Z^n + Z.(1/2)(1,...,1) respectively.
* ``Gplus(2n)`` / ``Gminus(2n)`` — D_n (n even) with the coroot lattice
  extended by (1/2)(1,...,1) or (1/2)(1,...,-1).
* ``simplyConnected`` / ``adjoint`` — any type list, with the coroot or
  the coweight lattice.
"""

import re
from dataclasses import dataclass
from fractions import Fraction

from . import ratlin as rl
from .ratlin import dot
from .errors import SpecificationError
from .rootdata import RootDatum, build_root_datum, with_cochar_lattice, simple_system
from .fundgroup import fundamental_group, p_value
from . import repcalc
from . import spinor


@dataclass(frozen=True)
class GroupSpec:
    family: str
    params: tuple

    def __str__(self):
        return f"{self.family}{self.params}"


@dataclass
class Group:
    """A catalog group: root datum, fundamental group, and the coordinate
    basis in which command-line weights are expressed."""
    name: str
    spec: GroupSpec
    rd: object
    fg: object
    weight_basis: tuple

    def weight_from_coords(self, coords):
        lam = rl.zero(self.rd.dim)
        for c, b in zip(coords, self.weight_basis):
            lam = rl.add(lam, rl.scale(c, b))
        if len(coords) != len(self.weight_basis):
            raise SpecificationError(
                f"{self.name} expects {len(self.weight_basis)} weight "
                f"coordinates, got {len(coords)}")
        return lam


def _e(n, i):
    return rl.unit(n, i)


def _half_ones(n, last_sign=1):
    v = [Fraction(1, 2)] * n
    v[-1] *= last_sign
    return tuple(v)


def _is_pow2(n):
    return n >= 1 and (n & (n - 1)) == 0


def make_group(spec):
    """Build the root datum and fundamental group for a catalog spec."""
    fam, p = spec.family, spec.params
    if fam == "SL_quot":
        n, d = p
        if n < 2 or d < 1 or n % d != 0:
            raise SpecificationError(f"SL_quot needs d | n, n >= 2; got {p}")
        rd = build_root_datum([("A", n - 1)], label=_sl_name(n, d))
        if d == 1:
            fg = fundamental_group(rd)
            gens = None
        else:
            m = n // d
            basis = tuple(rd.simple_coroots) + (rl.scale(m, _e(n, n - 1)),)
            rd = with_cochar_lattice(rd, basis)
            gens = [rl.scale(m, _e(n, 0))]
            fg = fundamental_group(rd, generators=gens)
        wb = (rd.simple_roots[0],) if (n, d) == (2, 2) else rd.fundamental_weights
        return Group(_sl_name(n, d), spec, rd, fg, wb)

    if fam == "GL":
        (n,) = p
        roots, coroots, w, _ = simple_system("A", n - 1)
        rd = RootDatum(roots, coroots, rl.identity(w), central_cochars=(),
                       label=f"GL{n}")
        fg = fundamental_group(rd, generators=[_e(n, 0)])
        return Group(f"GL{n}", spec, rd, fg, rl.identity(n))

    if fam == "Sp":
        (n,) = p
        rd = build_root_datum([("C", n)], label=f"Sp{2*n}")
        return Group(f"Sp{2*n}", spec, rd, fundamental_group(rd),
                     rd.fundamental_weights)

    if fam == "Sp_quot":
        (n,) = p
        rd = build_root_datum([("C", n)], label=f"PSp{2*n}")
        rows = rl.identity(n) + (_half_ones(n),)
        rd = with_cochar_lattice(rd, rl.row_lattice_basis(rows))
        fg = fundamental_group(rd, generators=[_half_ones(n)])
        return Group(f"PSp{2*n}", spec, rd, fg, rd.fundamental_weights)

    if fam in ("SO", "Spin"):
        (m,) = p
        if m < 3:
            raise SpecificationError("orthogonal groups need m >= 3")
        lt = [("D", m // 2)] if m % 2 == 0 else [("B", (m - 1) // 2)]
        rd = build_root_datum(lt, label=f"{fam}{m}")
        n = lt[0][1]
        if fam == "Spin":
            return Group(f"Spin{m}", spec, rd, fundamental_group(rd),
                         rd.fundamental_weights)
        rd = with_cochar_lattice(rd, rl.identity(n))
        fg = fundamental_group(rd, generators=[_e(n, 0)])
        return Group(f"SO{m}", spec, rd, fg, rd.fundamental_weights)

    if fam == "PSO":
        (m,) = p
        if m % 2 != 0 or m < 4:
            raise SpecificationError("PSO needs even m >= 4")
        n = m // 2
        rd = build_root_datum([("D", n)], label=f"PSO{m}")
        rows = rl.identity(n) + (_half_ones(n),)
        rd = with_cochar_lattice(rd, rl.row_lattice_basis(rows))
        gens = [_e(n, 0), _half_ones(n)] if n % 2 == 0 else [_half_ones(n)]
        fg = fundamental_group(rd, generators=gens)
        return Group(f"PSO{m}", spec, rd, fg, rd.fundamental_weights)

    if fam in ("Gplus", "Gminus"):
        (m,) = p
        n = m // 2
        if m % 2 != 0 or n % 2 != 0 or n <= 2:
            raise SpecificationError(
                "the plus/minus type D quotients need m = 2n with n even, n > 2")
        rd = build_root_datum([("D", n)], label=f"{fam}{m}")
        g = _half_ones(n, last_sign=1 if fam == "Gplus" else -1)
        rows = tuple(rd.simple_coroots) + (g,)
        rd = with_cochar_lattice(rd, rl.row_lattice_basis(rows))
        fg = fundamental_group(rd, generators=[g])
        return Group(f"{fam}{m}", spec, rd, fg, rd.fundamental_weights)

    if fam == "simplyConnected":
        lt = tuple(p)
        name = "x".join(f"{f}{r}" for f, r in lt)
        rd = build_root_datum(lt, label=name)
        return Group(name, spec, rd, fundamental_group(rd),
                     rd.fundamental_weights)

    if fam == "adjoint":
        lt = tuple(p)
        name = "x".join(f"{f}{r}" for f, r in lt) + "adj"
        rd = build_root_datum(lt, label=name)
        rd = with_cochar_lattice(rd, _fundamental_coweights(rd))
        return Group(name, spec, rd, fundamental_group(rd),
                     rd.fundamental_weights)

    raise SpecificationError(f"unknown catalog family {fam!r}")


def _sl_name(n, d):
    if d == 1:
        return f"SL{n}"
    if d == n:
        return f"PGL{n}"
    return f"SL{n}/mu{d}"


def _fundamental_coweights(rd):
    """Basis of the coweight lattice: dual basis to the simple roots inside
    the coroot span, one vector per simple root."""
    out = []
    for f in rd.factors:
        idx = f.indices
        block = tuple(tuple(dot(rd.simple_roots[a], rd.simple_coroots[b])
                            for b in idx) for a in idx)
        binv = rl.mat_inv(block)
        for j in range(len(idx)):
            w = rl.zero(rd.dim)
            for b in range(len(idx)):
                w = rl.add(w, rl.scale(binv[b][j], rd.simple_coroots[idx[b]]))
            out.append(w)
    return tuple(out)


def highest_root(rd):
    """The highest root (as a character vector); the adjoint highest weight."""
    return max((r for r, _ in rd.positive_roots),
               key=lambda r: sum(rd.root_span_coords(r, check=False)))


# ----------------------------------------------------------------------
# name parsing

_NAME_PATTERNS = [
    (re.compile(r"^SL(\d+)/mu(\d+)$"), lambda n, d: GroupSpec("SL_quot", (n, d))),
    (re.compile(r"^SL(\d+)$"), lambda n: GroupSpec("SL_quot", (n, 1))),
    (re.compile(r"^PGL(\d+)$"), lambda n: GroupSpec("SL_quot", (n, n))),
    (re.compile(r"^GL(\d+)$"), lambda n: GroupSpec("GL", (n,))),
    (re.compile(r"^Sp(\d+)$"), lambda m: GroupSpec("Sp", (m // 2,))),
    (re.compile(r"^PSp(\d+)$"), lambda m: GroupSpec("Sp_quot", (m // 2,))),
    (re.compile(r"^SO(\d+)$"), lambda m: GroupSpec("SO", (m,))),
    (re.compile(r"^Spin(\d+)$"), lambda m: GroupSpec("Spin", (m,))),
    (re.compile(r"^PSO(\d+)$"), lambda m: GroupSpec("PSO", (m,))),
    (re.compile(r"^G(?:plus|\+)(\d+)$"), lambda m: GroupSpec("Gplus", (m,))),
    (re.compile(r"^G(?:minus|-)(\d+)$"), lambda m: GroupSpec("Gminus", (m,))),
    (re.compile(r"^E6adj$"), lambda: GroupSpec("adjoint", (("E", 6),))),
    (re.compile(r"^E7adj$"), lambda: GroupSpec("adjoint", (("E", 7),))),
    (re.compile(r"^E(\d)$"), lambda r: GroupSpec("simplyConnected", (("E", r),))),
    (re.compile(r"^F4$"), lambda: GroupSpec("simplyConnected", (("F", 4),))),
    (re.compile(r"^G2$"), lambda: GroupSpec("simplyConnected", (("G", 2),))),
]


def parse_group_name(name):
    for pat, make in _NAME_PATTERNS:
        m = pat.match(name)
        if m:
            return make(*(int(g) for g in m.groups()))
    raise SpecificationError(f"unknown group name {name!r}")


def group_by_name(name):
    return make_group(parse_group_name(name))


# ----------------------------------------------------------------------
# all-spinorial predicates and witnesses

def summary_check(spec):
    """Whether every orthogonal representation of the group is spinorial,
    per the classification of simple types; None when the classification
    makes no claim for the family (GL)."""
    fam, p = spec.family, spec.params
    if fam == "SL_quot":
        n, d = p
        if d % 2 == 1:
            return True
        return (n // d) % 2 == 0 and not (_is_pow2(n) and 2 * d == n)
    if fam == "GL":
        return None
    if fam in ("Sp", "Spin", "simplyConnected"):
        return True
    if fam == "SO":
        return False
    if fam == "Sp_quot":
        return p[0] % 4 == 0
    if fam == "PSO":
        return (p[0] // 2) % 4 == 0
    if fam in ("Gplus", "Gminus"):
        n = p[0] // 2
        return n > 4 and n % 4 == 0
    if fam == "adjoint":
        if len(p) != 1:
            raise SpecificationError("summary_check wants a single factor")
        f, r = p[0]
        if f == "A":
            return summary_check(GroupSpec("SL_quot", (r + 1, r + 1)))
        if f == "B":
            return False
        if f == "C":
            return summary_check(GroupSpec("Sp_quot", (r,)))
        if f == "D":
            return summary_check(GroupSpec("PSO", (2 * r,)))
        if f == "E" and r == 7:
            return False
        return True  # E6 (odd pi_1), E8, F4, G2 (trivial pi_1)
    raise SpecificationError(f"unknown catalog family {fam!r}")


def known_aspinorial_witness(spec):
    """A concrete aspinorial highest weight when summary_check is False."""
    fam, p = spec.family, spec.params
    if summary_check(spec):
        return None
    if fam == "SL_quot":
        n, d = p
        if _is_pow2(n) and 2 * d == n:
            # projection of the middle fundamental weight, orthogonal to the
            # quotiented all-ones direction
            h = n // 2
            return tuple(Fraction(1, 2) if i < h else Fraction(-1, 2)
                         for i in range(n))
        # n even, n/d odd: the adjoint representation
        v = [Fraction(0)] * n
        v[0], v[-1] = Fraction(1), Fraction(-1)
        return tuple(v)
    if fam == "SO":
        (m,) = p
        n = m // 2 if m % 2 == 0 else (m - 1) // 2
        return _e(n, 0)
    if fam == "Sp_quot":
        (n,) = p
        if n % 4 == 3:
            return rl.add(_e(n, 0), _e(n, 1))     # second fundamental rep
        return rl.scale(2, _e(n, 0))              # adjoint
    if fam == "PSO":
        n = p[0] // 2
        if n % 4 == 1:
            # the adjoint is spinorial here (its L value n(n-1)/2 is even);
            # the traceless symmetric square has odd L value n(n+1)/2
            return rl.scale(2, _e(n, 0))
        return rl.add(_e(n, 0), _e(n, 1))         # adjoint / exterior square
    if fam in ("Gplus", "Gminus"):
        n = p[0] // 2
        if n == 4:
            return _half_ones(n, last_sign=1 if fam == "Gplus" else -1)
        return rl.add(_e(n, 0), _e(n, 1))         # exterior square
    if fam == "adjoint":
        f, r = p[0]
        if (f, r) == ("E", 7):
            return highest_root(make_group(spec).rd)
        raise SpecificationError(
            f"no stored witness for adjoint type {f}{r}; use the matching "
            "classical family spec instead")
    raise SpecificationError(f"no witness known for {spec}")


def sweep_all_spinorial(group, box=2):
    """Closed-form sweep over the dominant orthogonal box; returns
    (all_spinorial, first_counterexample_or_None)."""
    for coords, lam in spinor.dominant_orthogonal_weights(group.rd, box):
        rep = spinor.OrthRep(irreducible=(tuple(lam),))
        v = spinor.is_spinorial(group.rd, group.fg, rep)
        if not v.spinorial:
            return False, (coords, lam)
    return True, None


# ----------------------------------------------------------------------
# type D tables

def type_d_weight(n, name):
    """Named weights of the type D_n torus in Euclidean coordinates.

    ``wk`` (k ones then zeros) for name "w<k>", plus "half_wn",
    "half_wminus", and "wminus" (1,...,1,-1).
    """
    if name == "half_wn":
        return _half_ones(n)
    if name == "half_wminus":
        return _half_ones(n, last_sign=-1)
    if name == "wminus":
        v = [Fraction(1)] * n
        v[-1] = Fraction(-1)
        return tuple(v)
    m = re.match(r"^w(\d+)$", name)
    if m and 1 <= int(m.group(1)) <= n:
        k = int(m.group(1))
        return tuple(Fraction(1 if i < k else 0) for i in range(n))
    raise SpecificationError(f"unknown type D weight name {name!r}")


def type_d_table(n):
    """p values per isogeny class and (dim, Casimir) rows for the named
    weights of D_n, computed by the engine."""
    rows = {}
    groups = [f"SO{2*n}", f"PSO{2*n}"]
    if n % 2 == 0 and n > 2:
        groups += [f"Gplus{2*n}", f"Gminus{2*n}"]
    for name in groups:
        g = group_by_name(name)
        rows[name] = p_value(g.rd, g.fg.generators)
    rd = build_root_datum([("D", n)])
    weights = {}
    names = [f"w{k}" for k in range(1, n + 1)] + ["half_wn", "half_wminus", "wminus"]
    for wname in names:
        lam = type_d_weight(n, wname)
        weights[wname] = (repcalc.weyl_dim(rd, lam), repcalc.casimir_value(rd, lam))
    return {"p": rows, "weights": weights}


# ----------------------------------------------------------------------
# standard test fleets

CATALOG_RANK_LE_4 = [
    "SL2", "SL3", "SL4", "SL5",
    "PGL2", "PGL3", "PGL4", "PGL5",
    "SL4/mu2",
    "GL2", "GL3",
    "Sp4", "Sp6", "Sp8",
    "PSp4", "PSp6", "PSp8",
    "SO3", "SO4", "SO5", "SO6", "SO7", "SO8", "SO9",
    "Spin5", "Spin7", "Spin8", "Spin9",
    "PSO6", "PSO8",
    "Gplus8", "Gminus8",
    "G2", "F4",
]


def summary_suite_specs():
    """The concrete parameter list of the family classification suite."""
    names = []
    for n in range(2, 13):
        for d in range(1, n + 1):
            if n % d == 0:
                names.append(_sl_name(n, d))
    names += [f"PSp{2*n}" for n in range(2, 9)]
    for m in range(4, 17, 2):
        names += [f"SO{m}", f"Spin{m}", f"PSO{m}"]
        n = m // 2
        if n % 2 == 0 and n > 2:
            names += [f"Gplus{m}", f"Gminus{m}"]
    names += [f"SO{m}" for m in range(3, 17, 2)]
    names += ["E6adj", "E7adj"]
    return names
