"""Command-line front end.

Every command prints a report (text by default, ``--json`` for the stable
schema) and exits 0 when all flags hold, 1 when one fails and 2 on bad input.
"""

from __future__ import annotations

import sys
from functools import wraps
from pathlib import Path

import click

from .classify import classify
from .convergence import Mode, converges_mode, parse_net
from .ideal import parse_ideal, parse_index
from .poset import enumerate_posets, to_list
from .report import Report, report_emit
from .rudin import constructive_transversal, is_transversal, parse_family, rudin_transversal
from .space import closure_suite, load_space, parse_set
from .suites import SUITES, SuiteSpec, run_suite

EXIT_INPUT = 2


def _emit(report: Report, as_json: bool) -> None:
    sys.stdout.buffer.write(report_emit(report, "json" if as_json else "text"))
    sys.stdout.flush()


def _finish(report: Report, as_json: bool, code: int | None = None) -> None:
    _emit(report, as_json)
    sys.exit((0 if report.passed else 1) if code is None else code)


def _guard(fn):
    """Turn library validation errors into exit code 2."""

    @wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ValueError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_INPUT)

    return wrapper


def _space(path: str):
    return load_space(Path(path).read_text(encoding="utf-8"))


json_option = click.option("--json", "as_json", is_flag=True, help="Emit the JSON report.")
space_arg = click.argument("file", type=click.Path(exists=True, dir_okay=False))


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main() -> None:
    """Decide order-theoretic and convergence properties of finite and catalogued spaces."""


@main.command("classify")
@space_arg
@json_option
@_guard
def classify_cmd(file: str, as_json: bool) -> None:
    """Property flags of the space in FILE."""
    _finish(classify(_space(file)), as_json)


@main.command()
@space_arg
@click.option("--set", "subset", required=True, help="Points such as 0,2 (empty for the empty set).")
@json_option
@_guard
def closures(file: str, subset: str, as_json: bool) -> None:
    """Closure, interior and the directed approximations of a subset."""
    space = _space(file)
    suite = closure_suite(space, parse_set(subset, space.n))
    report = Report("closures")
    report.sets.update(suite.as_dict())
    report.sets["set"] = to_list(suite.a)
    report.record("tilde<=hat<=closure", suite.tilde & ~suite.hat == 0 and suite.hat & ~suite.closure == 0,
                  {"tilde": to_list(suite.tilde), "hat": to_list(suite.hat), "closure": to_list(suite.closure)})
    _finish(report, as_json)


@main.command()
@space_arg
@click.option("--family", required=True, help='Members like "[0];[0,1]".')
@json_option
@_guard
def rudin(file: str, family: str, as_json: bool) -> None:
    """Least directed transversal of a Smyth-directed family."""
    poset = _space(file).poset
    fam = parse_family(family, poset.n)
    d = rudin_transversal(poset, fam)
    other = constructive_transversal(poset, fam)
    report = Report("rudin")
    report.sets["family"] = [to_list(f) for f in fam]
    report.sets["transversal"] = to_list(d)
    report.sets["constructive"] = to_list(other)
    report.record("Lemma4.2:transversal", is_transversal(poset, fam, d), {"transversal": to_list(d)})
    report.record("Lemma4.2:constructive", is_transversal(poset, fam, other), {"transversal": to_list(other)})
    _finish(report, as_json)


@main.command()
@space_arg
@click.option("--index", "index_text", default=None, help="chain:m or a poset file for the index set.")
@click.option("--net", "net_text", required=True, help='Values as "0:1,1:0,2:1".')
@click.option("--ideal", "ideal_text", default="i0", show_default=True,
              help="i0, trivial, powerset or gen:[0,1];[2].")
@click.option("--mode", type=click.Choice([m.value for m in Mode], case_sensitive=False), default="I",
              show_default=True)
@click.option("--wrt", type=click.Choice(["tau", "lawson"]), default="tau", show_default=True,
              help="Topology for mode I.")
@click.option("--point", type=int, required=True)
@json_option
@_guard
def convergence(file, index_text, net_text, ideal_text, mode, wrt, point, as_json) -> None:
    """Decide one convergence question; every other mode is listed alongside."""
    space = _space(file)
    if index_text is None:
        index_text = f"chain:{len([c for c in net_text.split(',') if c.strip()])}"
    elif Path(index_text).is_file():
        index_text = Path(index_text).read_text(encoding="utf-8")
    index = parse_index(index_text)
    net = parse_net(net_text, index)
    ideal = parse_ideal(ideal_text, index)
    report = Report("convergence")
    got = converges_mode(space, net, ideal, mode.upper(), point, wrt)
    report.record("converges", got, {"mode": mode.upper(), "wrt": wrt, "point": point})
    every = {m.value: converges_mode(space, net, ideal, m, point) for m in Mode}
    every["I@lawson"] = converges_mode(space, net, ideal, Mode.I, point, "lawson")
    report.sets["modes"] = every
    report.sets["ideal"] = ideal.describe()
    report.sets["proper"] = ideal.proper
    report.sets["admissible"] = ideal.admissible
    report.stats["index"] = index.describe()
    _finish(report, as_json)


@main.group()
@click.argument("name")
@click.pass_context
def witness(ctx: click.Context, name: str) -> None:
    """Catalogued countable spaces (OmegaChain, Example63)."""
    from .witness import WitnessError, get_witness

    try:
        ctx.obj = get_witness(name)
    except WitnessError as exc:
        raise click.BadParameter(str(exc), param_hint="NAME") from None


@witness.command()
@json_option
@click.pass_obj
@_guard
def facts(w, as_json: bool) -> None:
    """Run the fact suite of the witness."""
    from .witness import witness_facts

    _finish(witness_facts(w), as_json)


@witness.command()
@click.option("--order", nargs=2, default=None, metavar="X Y", help="Decide X <= Y.")
@click.option("--mode", type=click.Choice([m.value for m in Mode], case_sensitive=False), default=None)
@click.option("--net", "net_text", default=None, help="alt:p, const:p, chain or PREFIX;BLOCK.")
@click.option("--ideal", "ideal_text", default="i0", show_default=True)
@click.option("--point", default=None)
@json_option
@click.pass_obj
@_guard
def query(w, order, mode, net_text, ideal_text, point, as_json) -> None:
    """One order or convergence question about the witness."""
    from .witness import parse_ideal as w_ideal
    from .witness import parse_net as w_net
    from .witness import parse_point, w_converges_mode, w_order

    report = Report(f"{w.name}:query")
    if order:
        x, y = (parse_point(t) for t in order)
        report.record("order", w_order(w, x, y), {"x": str(x), "y": str(y)})
    if mode:
        if net_text is None or point is None:
            raise click.UsageError("--mode needs --net and --point")
        net, ideal, x = w_net(net_text), w_ideal(ideal_text), parse_point(point)
        got = w_converges_mode(w, net, ideal, mode.upper(), x)
        report.record("converges", got, {"mode": mode.upper(), "net": net.describe(),
                                         "ideal": ideal.describe(), "point": str(x)})
    if not report.flags:
        raise click.UsageError("give --order X Y or --mode with --net and --point")
    _finish(report, as_json)


@witness.command()
@click.argument("k", type=click.IntRange(1, 16))
@click.option("--emit-dsl", is_flag=True, help="Print the truncation as a space description.")
@json_option
@click.pass_obj
@_guard
def truncate(w, k: int, emit_dsl: bool, as_json: bool) -> None:
    """Finite truncation of the witness, classified or printed."""
    from .witness import truncate as w_truncate
    from .witness import truncate_dsl

    if emit_dsl:
        click.echo(truncate_dsl(w, k), nl=False)
        return
    report = classify(w_truncate(w, k))
    report.name = f"{w.name}:truncate({k})"
    _finish(report, as_json)


@main.command()
@click.argument("suite", type=click.Choice(SUITES))
@click.option("--max-n", type=int, default=None, help="Largest carrier size (suite default otherwise).")
@click.option("--max-index", type=int, default=3, show_default=True, help="Largest index chain.")
@click.option("--random", "random_count", type=int, default=None, help="Sample N structures instead.")
@click.option("--seed", type=int, default=None)
@json_option
@_guard
def check(suite, max_n, max_index, random_count, seed, as_json) -> None:
    """Run a proposition suite."""
    report, code = run_suite(SuiteSpec(suite, max_n, max_index, seed, random_count))
    _finish(report, as_json, code)


@main.command("enumerate")
@click.option("--n", "n", type=click.IntRange(1, 6), required=True)
@click.option("--emit-dsl", is_flag=True, help="Print every poset, blank-line separated.")
@_guard
def enumerate_cmd(n: int, emit_dsl: bool) -> None:
    """All labelled partial orders on N points."""
    count = 0
    for poset in enumerate_posets(n):
        count += 1
        if emit_dsl:
            click.echo(poset.to_dsl())
    if not emit_dsl:
        click.echo(count)


if __name__ == "__main__":
    main()
