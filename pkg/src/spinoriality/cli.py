"""Command-line frontend: spinoriality verdicts, isogeny tables, oracle
cross-checks, periodicity atlases, and family summary suites.

Groups are named catalog entries (``PGL2``, ``SO8``, ``SL8/mu4``, ...) or JSON
files describing either a catalog spec or an inline root datum.  All output is
exact: certificates are arbitrary-precision integers printed in decimal, and
rationals are printed as ``a/b``.

Exit codes: 0 computed (whatever the verdict), 2 malformed spec, 3 integrality
violation, 4 dimension guard exceeded.
"""

import json
import os
import sys
from fractions import Fraction

import click

from . import ratlin as rl
from . import catalog, repcalc, spinor
from .errors import (SpecificationError, IntegralityError, GuardExceededError)
from .fundgroup import fundamental_group, p_value
from .rootdata import RootDatum, with_cochar_lattice, _from_cartan
from .repcalc import FREUDENTHAL_GUARD_DEFAULT

EXIT_SPEC = 2
EXIT_INTEGRALITY = 3
EXIT_GUARD = 4


# ----------------------------------------------------------------------
# group and weight parsing

def load_group(spec_arg):
    """A catalog name, or a path to a JSON group file.

    File format: ``{"catalog": {"family": ..., "params": [...]}}`` or
    ``{"rootDatum": {"cartan": [[...]], "cocharGenerators": [[...]],
    "denominator": d}}``.
    """
    if os.path.exists(spec_arg):
        try:
            with open(spec_arg) as fh:
                doc = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise SpecificationError(f"cannot read group file: {exc}")
        return _group_from_document(doc, spec_arg)
    return catalog.group_by_name(spec_arg)


def _group_from_document(doc, origin):
    if not isinstance(doc, dict):
        raise SpecificationError(f"{origin}: group file must be a JSON object")
    if "catalog" in doc:
        entry = doc["catalog"]
        if not isinstance(entry, dict) or "family" not in entry:
            raise SpecificationError(f"{origin}: catalog entry needs a family")
        params = _tuplify(entry.get("params", ()))
        return catalog.make_group(catalog.GroupSpec(entry["family"], params))
    if "rootDatum" in doc:
        return _group_from_root_datum(doc["rootDatum"], origin)
    raise SpecificationError(
        f"{origin}: expected a 'catalog' or 'rootDatum' key")


def _tuplify(x):
    if isinstance(x, list):
        return tuple(_tuplify(v) for v in x)
    return x


def _group_from_root_datum(entry, origin):
    try:
        cartan = entry["cartan"]
    except (TypeError, KeyError):
        raise SpecificationError(f"{origin}: rootDatum needs a cartan matrix")
    roots, coroots, width, _ = _from_cartan(cartan)
    rd = RootDatum(tuple(roots), tuple(coroots), tuple(coroots),
                   central_cochars=(), label="custom")
    den = int(entry.get("denominator", 1))
    if den < 1:
        raise SpecificationError(f"{origin}: denominator must be >= 1")
    gens = entry.get("cocharGenerators", [])
    rows = list(rd.simple_coroots)
    for g in gens:
        rows.append(tuple(Fraction(int(x), den) for x in g))
    rd = with_cochar_lattice(rd, rl.row_lattice_basis(rows), label="custom")
    fg = fundamental_group(rd)
    return catalog.Group("custom", catalog.GroupSpec("rootDatum", ()),
                         rd, fg, rd.fundamental_weights)


def parse_weight_option(group, text):
    """One ``--weight`` value: summands joined by ``+``, each a comma list of
    coordinates in the group's weight basis, with an ``S:`` prefix marking a
    hyperbolic block."""
    irreducible, hyperbolic = [], []
    for part in text.split("+"):
        part = part.strip()
        kind = "orth"
        if part.upper().startswith("S:"):
            kind = "S"
            part = part[2:]
        try:
            coords = [Fraction(tok.strip()) for tok in part.split(",") if tok.strip() != ""]
        except (ValueError, ZeroDivisionError):
            raise SpecificationError(f"cannot parse weight coordinates {part!r}")
        if not coords:
            raise SpecificationError(f"empty weight in {text!r}")
        lam = group.weight_from_coords(coords)
        (hyperbolic if kind == "S" else irreducible).append(lam)
    return spinor.orth_rep(group.rd, irreducible=irreducible,
                           hyperbolic=hyperbolic)


# ----------------------------------------------------------------------
# exact serialization

def jsonable(x):
    """Exact JSON form: integers as decimal strings, rationals as 'a/b'."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    return str(x)


def emit_json(payload):
    click.echo(json.dumps(jsonable(payload), sort_keys=True,
                          separators=(",", ":")))


def fmt_q(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def fmt_vec(v):
    return "(" + ",".join(fmt_q(x) for x in v) + ")"


# ----------------------------------------------------------------------
# command implementations

def run_check(group, weights, fmt):
    if not weights:
        raise SpecificationError("check needs at least one --weight")
    results = []
    for text in weights:
        rep = parse_weight_option(group, text)
        verdict = spinor.is_spinorial(group.rd, group.fg, rep)
        results.append((text, verdict))
    if fmt == "json":
        emit_json({
            "group": group.name,
            "results": [{
                "weight": text,
                "spinorial": v.spinorial,
                "method": v.method,
                "certificate": [{"generator": list(nu), "q": q}
                                for nu, q in v.certificate],
            } for text, v in results],
        })
        return
    for text, v in results:
        word = "spinorial" if v.spinorial else "aspinorial"
        click.echo(f"{group.name} weight {text}: {word}")
        for nu, q in v.certificate:
            click.echo(f"  q{fmt_vec(nu)} = {fmt_q(q)}")
        if not v.certificate:
            click.echo("  fundamental group trivial: spinorial by convention")


def _type_d_rank(group):
    fams, _ = group.rd.lie_type
    if len(fams) == 1 and fams[0][0] == "D":
        return fams[0][1]
    return None


def run_table(group, fmt):
    report = {"group": group.name,
              "fundamental_group": list(group.fg.invariant_factors)}
    if group.fg.generators:
        report["p"] = p_value(group.rd, group.fg.generators)
        report["generators"] = [list(nu) for nu in group.fg.generators]
    n = _type_d_rank(group)
    dtable = catalog.type_d_table(n) if n is not None else None
    if dtable is not None:
        report["isogeny_p"] = dtable["p"]
        report["weights"] = {
            name: {"dim": dim, "casimir": chi}
            for name, (dim, chi) in dtable["weights"].items()}
    if fmt == "json":
        emit_json(report)
        return
    click.echo(f"group {group.name}")
    factors = ", ".join(str(d) if d else "Z" for d in group.fg.invariant_factors)
    click.echo(f"  pi_1 invariant factors: [{factors or 'trivial'}]")
    if group.fg.generators:
        click.echo(f"  p = {fmt_q(report['p'])}")
        for nu in group.fg.generators:
            click.echo(f"  generator {fmt_vec(nu)}")
    if dtable is not None:
        click.echo(f"  type D_{n} isogeny classes:")
        for gname, pv in dtable["p"].items():
            click.echo(f"    {gname:10s} p = {fmt_q(pv)}")
        click.echo("  named weights (dim, Casimir):")
        for wname, (dim, chi) in dtable["weights"].items():
            click.echo(f"    {wname:12s} dim = {dim}  chi = {fmt_q(chi)}")


def run_oracle(group, box, guard, fmt):
    nus = group.fg.generators or tuple(group.rd.simple_coroots[:1])
    rows, agree, total = [], 0, 0
    for coords, lam in spinor.dominant_orthogonal_weights(
            group.rd, box, basis=group.weight_basis):
        for nu in nus:
            rep = spinor.oracle_compare(group.rd, lam, nu,
                                        freudenthal_guard=guard)
            total += 1
            agree += bool(rep["ok"])
            rows.append({
                "coords": list(coords),
                "generator": list(nu),
                "L": rep["L"],
                "q": rep["q"],
                "parity_agrees": rep["parity_agrees"],
                "weyl_sum": rep["weyl_sum"],
                "weyl_agrees": rep["weyl_agrees"],
                "ok": rep["ok"],
            })
    if fmt == "json":
        emit_json({"group": group.name, "box": box, "agree": agree,
                   "total": total, "rows": rows})
        return
    for row in rows:
        mark = "ok " if row["ok"] else "FAIL"
        ws = "" if row["weyl_sum"] is None else f"  weyl = {fmt_q(row['weyl_sum'])}"
        click.echo(f"  {mark} lambda{tuple(row['coords'])} nu {fmt_vec(row['generator'])}"
                   f"  L = {fmt_q(row['L'])}  q = {fmt_q(row['q'])}{ws}")
    click.echo(f"{group.name}: {agree}/{total} agree")


def run_atlas(group, box, k, fmt, grid_file):
    report = spinor.scan_periodicity(group.rd, group.fg, box, k,
                                     basis=group.weight_basis)
    if grid_file:
        _write_grid(group, box, grid_file)
    payload = {
        "group": group.name,
        "box": report["box"],
        "k": report["k"],
        "violations": [list(map(list, v)) for v in report["violations"]],
        "points": report["points"],
        "spinorial_points": report["spinorial_points"],
        "density": report["density"],
        "minimal_k": report["minimal_k"],
        "vacuous": report["vacuous"],
    }
    if fmt == "json":
        emit_json(payload)
        return
    click.echo(f"{group.name}: box {box}, period 2^{k}")
    click.echo(f"  orthogonal points: {report['points']}"
               f"  spinorial: {report['spinorial_points']}"
               f"  density: {fmt_q(report['density'])}")
    click.echo(f"  violations at k={k}: {len(report['violations'])}")
    if report["vacuous"]:
        click.echo("  note: 2^k exceeds the box; the scan is vacuous")
    if report["minimal_k"] is not None:
        click.echo(f"  smallest violation-free exponent in box: {report['minimal_k']}")
    if grid_file:
        click.echo(f"  verdict grid written to {grid_file}")


def _write_grid(group, box, path):
    """Plain CSV of weight coordinates and the verdict bit, for plotting."""
    with open(path, "w") as fh:
        r = len(group.weight_basis)
        fh.write(",".join(f"c{i+1}" for i in range(r)) + ",spinorial\n")
        for coords, lam in spinor.dominant_orthogonal_weights(
                group.rd, box, basis=group.weight_basis):
            rep = spinor.OrthRep(irreducible=(tuple(lam),))
            v = spinor.is_spinorial(group.rd, group.fg, rep)
            fh.write(",".join(str(c) for c in coords)
                     + f",{1 if v.spinorial else 0}\n")


def run_summary(group, box, fmt):
    predicted = catalog.summary_check(group.spec)
    swept, counterexample = catalog.sweep_all_spinorial(group, box=box)
    payload = {
        "group": group.name,
        "box": box,
        "all_spinorial_predicted": predicted,
        "all_spinorial_swept": swept,
        "agrees": None if predicted is None else predicted == swept,
    }
    if counterexample is not None:
        coords, lam = counterexample
        payload["counterexample"] = {"coords": list(coords),
                                     "weight": list(lam)}
    if predicted is False:
        witness = catalog.known_aspinorial_witness(group.spec)
        if witness is not None:
            v = spinor.is_spinorial(
                group.rd, group.fg,
                spinor.OrthRep(irreducible=(tuple(rl.vec(witness)),)))
            payload["witness"] = {"weight": list(rl.vec(witness)),
                                  "aspinorial": not v.spinorial}
    if fmt == "json":
        emit_json(payload)
        return
    click.echo(f"{group.name}: every orthogonal rep spinorial?")
    click.echo(f"  classification says: {predicted}")
    click.echo(f"  box-{box} sweep says: {swept}")
    if "counterexample" in payload:
        c = payload["counterexample"]
        click.echo(f"  counterexample at coordinates {tuple(c['coords'])}")
    if "witness" in payload:
        w = payload["witness"]
        state = "aspinorial (as classified)" if w["aspinorial"] else "SPINORIAL (mismatch!)"
        click.echo(f"  stored witness {fmt_vec(w['weight'])}: {state}")
    status = "PASS" if payload["agrees"] in (None, True) else "FAIL"
    click.echo(f"  {status}")


# ----------------------------------------------------------------------
# click wiring

def _guard_default():
    env = os.environ.get("SPINOR_GUARD")
    if env is None:
        return FREUDENTHAL_GUARD_DEFAULT
    try:
        return int(env)
    except ValueError:
        raise SpecificationError(f"SPINOR_GUARD must be an integer, got {env!r}")


def _common(fn):
    fn = click.option("--group", "group_arg", required=True,
                      help="Catalog name or JSON group file.")(fn)
    fn = click.option("--format", "fmt", type=click.Choice(["text", "json"]),
                      default="text", help="Output format.")(fn)
    return fn


def _run(body):
    try:
        body()
    except SpecificationError as exc:
        click.echo(f"spec error: {exc}", err=True)
        sys.exit(EXIT_SPEC)
    except IntegralityError as exc:
        click.echo(f"integrality violation: {exc}", err=True)
        sys.exit(EXIT_INTEGRALITY)
    except GuardExceededError as exc:
        click.echo(f"guard exceeded: {exc}", err=True)
        sys.exit(EXIT_GUARD)


@click.group()
def main():
    """Decide whether orthogonal representations lift to the spin group."""


@main.command()
@_common
@click.option("--weight", "weights", multiple=True,
              help="Weight coordinates a,b,...; summands joined by '+', "
                   "prefix S: for a hyperbolic block.  Repeatable.")
def check(group_arg, weights, fmt):
    """Spinoriality verdict with an exact certificate per generator."""
    _run(lambda: run_check(load_group(group_arg), weights, fmt))


@main.command()
@_common
def table(group_arg, fmt):
    """Fundamental group, p value, and type D isogeny/weight tables."""
    _run(lambda: run_table(load_group(group_arg), fmt))


@main.command()
@_common
@click.option("--box", default=2, show_default=True,
              help="Coordinate box for the weight sweep.")
@click.option("--guard", default=None, type=int,
              help="Dimension guard for the multiplicity oracle "
                   "(default from SPINOR_GUARD or built-in).")
def oracle(group_arg, box, guard, fmt):
    """Cross-check the closed form against the brute-force oracles."""
    def body():
        g = guard if guard is not None else _guard_default()
        run_oracle(load_group(group_arg), box, g, fmt)
    _run(body)


@main.command()
@_common
@click.option("--box", default=8, show_default=True,
              help="Coordinate box for the periodicity scan.")
@click.option("--k", default=2, show_default=True,
              help="Test invariance of the verdict under shifts by 2^k.")
@click.option("--grid-file", default=None,
              help="Also write a CSV grid of verdict bits for plotting.")
def atlas(group_arg, box, k, fmt, grid_file):
    """Scan for violations of 2^k-periodicity of the verdict."""
    _run(lambda: run_atlas(load_group(group_arg), box, k, fmt, grid_file))


@main.command()
@_common
@click.option("--box", default=2, show_default=True,
              help="Coordinate box for the verification sweep.")
def summary(group_arg, box, fmt):
    """Check the family classification of all-spinorial groups by sweep."""
    _run(lambda: run_summary(load_group(group_arg), box, fmt))


if __name__ == "__main__":
    main()
