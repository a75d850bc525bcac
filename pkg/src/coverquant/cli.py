"""coverquant command line.

Exit codes: 0 success, 1 computation failure, 2 bad configuration.
"""
import csv
import io
import json
import sys

import click

from . import cbengine as C
from . import quasir
from . import twistor as T
from . import udot as U
from . import verify as V
from .halfalg import HalfAlgebra, HeightError
from .repmod import HWModule
from .rootdatum import DatumError, load

SCHEMA = 1


class ComputationFailed(click.ClickException):
    exit_code = 1


class BadConfig(click.ClickException):
    exit_code = 2


def _datum(spec):
    try:
        return load(spec)
    except DatumError as exc:
        raise BadConfig(str(exc))


def _weight(datum, text, what):
    if text is None:
        return None
    try:
        w = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise BadConfig("%s must be comma-separated integers, got %r" % (what, text))
    if len(w) != datum.X_rank:
        raise BadConfig("%s has %d entries, the datum's weight lattice has rank %d"
                        % (what, len(w), datum.X_rank))
    return w


def _depth(datum, lam):
    """Height of lam - w0 lam = 2 lam (w0 = -1 for the builtin types)."""
    try:
        return sum(T._solve_int(datum, tuple(2 * x for x in lam)))
    except T.TwistError as exc:
        raise BadConfig("cannot bound the depth of V(%s): %s; pass --depth" % (lam, exc))


def _emit(ctx, payload, rows=None, header=None):
    """Write a JSON report (or CSV rows when asked for) to --out or stdout."""
    opts = ctx.find_root().obj
    fmt = opts["format"]
    if fmt == "csv":
        if rows is None:
            raise BadConfig("CSV output is only available for Gram matrices and exponent tables")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        text = buf.getvalue()
    else:
        payload = dict(payload, schema=SCHEMA)
        text = json.dumps(payload, indent=1, sort_keys=True) + "\n"
    out = opts["out"]
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _scalar_cells(c):
    return [str(c.plus), str(c.minus)]


def _gram_rows(labels, M):
    for a, ra in enumerate(labels):
        for b, rb in enumerate(labels):
            if not M[a][b].is_zero():
                yield [ra, rb] + _scalar_cells(M[a][b])


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--out", type=click.Path(dir_okay=False), default=None, help="Write the report here.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json")
@click.option("--jobs", type=int, default=1, show_default=True, help="Worker processes.")
@click.pass_context
def main(ctx, out, fmt, jobs):
    """Exact computations for quantum covering groups."""
    ctx.obj = {"out": out, "format": fmt, "jobs": max(1, jobs)}


def _set_root(key):
    def cb(ctx, param, value):
        if value is not None:
            ctx.find_root().obj[key] = max(1, value) if key == "jobs" else value
    return cb


def _output_options(f):
    # also accepted after the subcommand name
    f = click.option("--out", type=click.Path(dir_okay=False), default=None, expose_value=False,
                     callback=_set_root("out"), help="Write the report here.")(f)
    f = click.option("--format", type=click.Choice(["json", "csv"]), default=None, expose_value=False,
                     callback=_set_root("format"), help="json (default) or csv.")(f)
    f = click.option("--jobs", type=int, default=None, expose_value=False,
                     callback=_set_root("jobs"), help="Worker processes.")(f)
    return f


def _common(f):
    f = click.option("--datum", default="osp(1|2)", show_default=True,
                     help="Builtin name or path to a datum JSON file.")(f)
    return _output_options(f)


# datum ---------------------------------------------------------------------------

@main.group()
def datum():
    """Root datum utilities."""


@datum.command("validate")
@click.argument("spec")
@_output_options
@click.pass_context
def datum_validate(ctx, spec):
    """Check the axioms of a datum file (or builtin)."""
    d = _datum(spec)
    _emit(ctx, {"datum": d.to_json(), "valid": True, "problems": [],
                "simply_connected": d.simply_connected(), "x_regular": d.x_regular()})


# half algebra --------------------------------------------------------------------

@main.group()
def half():
    """The half algebra f."""


@half.command("gram")
@_common
@click.option("--height", type=int, default=3, show_default=True)
@click.pass_context
def half_gram(ctx, datum, height):
    """Gram matrices of the form on f, per weight up to a height."""
    D = _datum(datum)
    alg = HalfAlgebra(D, height)
    blocks, rows = [], []
    for nu in alg.weights_upto(height):
        comp = alg.component(nu)
        if not comp.dim:
            continue
        names = [alg.dword_str(b) for b in comp.basis]
        G = alg.gram(nu)
        blocks.append({"nu": list(nu), "basis": names,
                       "matrix": [[c.to_json() for c in row] for row in G]})
        for r in _gram_rows(names, G):
            rows.append([" ".join(map(str, nu))] + r)
    _emit(ctx, {"command": "half gram", "datum": D.name, "height": height, "blocks": blocks},
          rows, ["nu", "row", "col", "eps+", "eps-"])


# quasi-R -------------------------------------------------------------------------

@main.command("theta")
@_common
@click.option("-s", "s", type=click.IntRange(1, 4), default=3, show_default=True)
@click.option("--height", type=int, default=4, show_default=True)
@click.pass_context
def theta(ctx, datum, s, height):
    """Quasi-R-matrix Theta_s with a unitarity report."""
    D = _datum(datum)
    alg = HalfAlgebra(D, height + 2)
    th = quasir.compute_theta(alg, s, height)
    rep = quasir.check_unitarity(th)
    _emit(ctx, {"command": "theta", "datum": D.name, "theta": th.to_json(),
                "unitarity": {"pass": rep["pass"], "failures": [list(nu) for nu in rep["failures"]]}})
    if not rep["pass"]:
        raise ComputationFailed("Theta_%d is not unitary at %s" % (s, rep["failures"][:3]))


# modules -------------------------------------------------------------------------

@main.group()
def module():
    """Simple modules V(lambda)."""


@module.command("dump")
@_common
@click.option("--lambda", "lam", required=True, help="Dominant highest weight, e.g. 1,0.")
@click.option("--height", type=int, default=8, show_default=True, help="Depth bound.")
@click.pass_context
def module_dump(ctx, datum, lam, height):
    """Weight spaces, basis and generator action of V(lambda)."""
    D = _datum(datum)
    lam = _weight(D, lam, "--lambda")
    if not D.is_dominant(lam):
        raise BadConfig("--lambda %s is not dominant" % (lam,))
    alg = HalfAlgebra(D, height + 1)
    M = HWModule(alg, lam)
    spaces = []
    for nu in alg.weights_upto(height):
        n = M.dim(nu)
        if not n:
            continue
        acts = []
        for a in range(n):
            for g in "EF":
                for i in range(D.rank):
                    if g == "F" and sum(nu) >= height:
                        continue
                    img = M.gen(g, i, (nu, a))
                    if img:
                        acts.append({"gen": g, "i": i, "from": a,
                                     "to": [{"nu": list(k[0]), "index": k[1], "coef": c.to_json()}
                                            for k, c in sorted(img.items())]})
        spaces.append({"nu": list(nu), "weight": list(M.wt(nu)), "dim": n,
                       "basis": [alg.dword_str(b) for b in M.basis_dwords(nu)], "action": acts})
    _emit(ctx, {"command": "module dump", "datum": D.name, "lambda": list(lam),
                "dim": sum(s["dim"] for s in spaces), "spaces": spaces})


# canonical bases ---------------------------------------------------------------

@main.group()
def cb():
    """Canonical bases of N(lambda, lambda') and of U-dot."""


@cb.command("N")
@_common
@click.option("--lhw", required=True, help="Highest weight lambda of V(lambda).")
@click.option("--rlw", required=True, help="lambda' of the lowest weight module omega V(lambda').")
@click.option("--depth", type=int, default=None, help="Truncate to total depth.")
@click.pass_context
def cb_n(ctx, datum, lhw, rlw, depth):
    """Canonical basis of N(lambda, lambda')."""
    D = _datum(datum)
    lam, lamp = _weight(D, lhw, "--lhw"), _weight(D, rlw, "--rlw")
    for w, name in ((lam, "--lhw"), (lamp, "--rlw")):
        if not D.is_dominant(w):
            raise BadConfig("%s %s is not dominant" % (name, w))
    top = depth if depth is not None else max(_depth(D, lam), _depth(D, lamp))
    alg = HalfAlgebra(D, top + 2)
    els = C.cb_of_N(alg, lam, lamp, depth=depth)
    _emit(ctx, {"command": "cb N", "datum": D.name, "lambda": list(lam), "lambda2": list(lamp),
                "depth": depth, "elements": [e.to_json() for e in els]})


@cb.command("udot")
@_common
@click.option("--zeta", required=True)
@click.option("--height", type=int, default=3, show_default=True)
@click.pass_context
def cb_udot(ctx, datum, zeta, height):
    """Canonical basis of U-dot 1_zeta up to a total height."""
    D = _datum(datum)
    z = _weight(D, zeta, "--zeta")
    alg = HalfAlgebra(D, 2 * height + 2)
    els = C.cb_of_udot(alg, z, height)
    _emit(ctx, {"command": "cb udot", "datum": D.name, "zeta": list(z), "height": height,
                "elements": [e.to_json() for e in els]})


# U-dot forms ---------------------------------------------------------------------

@main.group()
def udot():
    """The modified form U-dot."""


@udot.command("gram")
@_common
@click.option("--zeta", required=True)
@click.option("--height", type=int, default=2, show_default=True)
@click.option("--form", type=click.Choice(["std", "prime"]), default="std", show_default=True)
@click.pass_context
def udot_gram(ctx, datum, zeta, height, form):
    """Gram matrix of the monomial basis x^- y^+ 1_zeta."""
    D = _datum(datum)
    z = _weight(D, zeta, "--zeta")
    alg = HalfAlgebra(D, 2 * height + 2)
    keys, M = U.gram(alg, z, height, form)
    names = [U.to_text(U.UDot(alg, {k: C.ONE})).split("] ", 1)[1] for k in keys]
    _emit(ctx, {"command": "udot gram", "datum": D.name, "zeta": list(z), "height": height,
                "form": form, "basis": names, "matrix": [[c.to_json() for c in row] for row in M]},
          list(_gram_rows(names, M)), ["row", "col", "eps+", "eps-"])


# twistor -------------------------------------------------------------------------

@main.group()
def twist():
    """Twistor maps."""


@twist.command("check")
@_common
@click.option("--zeta", required=True)
@click.option("--height", type=int, default=3, show_default=True)
@click.pass_context
def twist_check(ctx, datum, zeta, height):
    """Enhancer and the t-exponent table of the U-dot canonical basis."""
    D = _datum(datum)
    z = _weight(D, zeta, "--zeta")
    alg = HalfAlgebra(D, 2 * height + 2)
    enh = T.enhancer_for(alg)
    problems = enh.validate()
    if problems:
        raise ComputationFailed("enhancer fails: %s" % problems[:3])
    rows = T.exponent_table(alg, z, height, enh=enh, shift_check=True)
    _emit(ctx, {"command": "twist check", "datum": D.name, "zeta": list(z), "height": height,
                "enhancer": enh.to_json(), "table": rows},
          [[r["b"], r["b2"], " ".join(map(str, r["zeta"])), r["f"]] for r in rows],
          ["b", "b2", "zeta", "f"])


# verification --------------------------------------------------------------------

@main.group("verify")
def verify_group():
    """Acceptance checks."""


@verify_group.command("all")
@_common
@click.option("--height", type=int, default=6, show_default=True, help="Quasi-R height.")
@click.option("--only", default=None, help="Comma-separated criterion numbers.")
@click.pass_context
def verify_all(ctx, datum, height, only):
    """Run the acceptance checks that apply to a builtin datum."""
    if datum not in ("osp(1|2)", "osp(1|4)"):
        raise BadConfig("verify all runs on the builtins osp(1|2) and osp(1|4)")
    try:
        nums = None if only is None else {int(x) for x in only.split(",")}
    except ValueError:
        raise BadConfig("--only must be comma-separated integers")
    opts = ctx.find_root().obj
    results = V.run_all(datum, height, nums, opts["jobs"])
    for r in results:
        click.echo(r.line())
    if opts["out"]:
        _emit(ctx, {"command": "verify all", "datum": datum, "height": height,
                    "results": [r.to_json() for r in results]})
    failed = [r for r in results if not r.passed]
    if failed:
        raise ComputationFailed("%d criteria failed" % len(failed))


def run(argv=None):
    """Entry point returning the exit code instead of exiting."""
    try:
        main.main(args=argv, prog_name="coverquant", standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        return 1
    except DatumError as exc:
        click.echo("Error: %s" % exc, err=True)
        return 2
    except (ArithmeticError, C.ProviderError, HeightError) as exc:
        click.echo("Error: %s" % exc, err=True)
        return 1
    return 0


def entry():
    sys.exit(run())
