"""Command line front end: enumeration, homology tables, verification suites.

All subcommands read and write JSON; random sampling is controlled by
--seed so every run is reproducible.  Exit status is zero unless a
verification check failed (or was flagged, under --strict) or an input
could not be parsed.
"""

from __future__ import annotations

import json
import re

import click

from . import homology as hl
from . import verify as vf
from .paths import enumerate_below, path_from_json, path_sort_key, path_to_json


def _load_json(path: str, what: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise click.ClickException(f"could not read {what} {path!r}: {e}")


def _parse_degrees(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"(-?\d+)\.\.(-?\d+)", text.strip())
    if not m:
        raise click.ClickException(f"--degrees wants a..b, got {text!r}")
    a, b = int(m.group(1)), int(m.group(2))
    if a > b:
        raise click.ClickException(f"--degrees range is empty: {text!r}")
    return a, b


@click.group()
def main():
    """Exact chain complexes of corner-rounded lattice paths."""


@main.group(name="paths")
def paths_group():
    """Path enumeration utilities."""


@paths_group.command(name="enumerate")
@click.option(
    "--below",
    "below_file",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="JSON file with one path; prints every path weakly below it.",
)
def paths_enumerate(below_file: str):
    """List all admissible paths weakly below a path, one JSON per line."""
    obj = _load_json(below_file, "path file")
    try:
        top = path_from_json(obj)
    except (KeyError, TypeError, ValueError) as e:
        raise click.ClickException(f"malformed path in {below_file!r}: {e}")
    for p in sorted(enumerate_below(top), key=path_sort_key):
        click.echo(json.dumps(path_to_json(p), sort_keys=True))


@main.group(name="complex")
def complex_group():
    """Chain complex construction."""


@complex_group.command(name="build")
@click.option(
    "--spec",
    "spec_file",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Complex description JSON (see README for the schema).",
)
@click.option(
    "--out",
    "outdir",
    required=True,
    type=click.Path(file_okay=False),
    help="Directory for meta.json, basis-<d>.json and boundary-<d>.txt.",
)
def complex_build(spec_file: str, outdir: str):
    """Assemble a complex and write its bases and boundary matrices."""
    spec = _load_json(spec_file, "complex spec")
    try:
        cx = hl.build_complex(spec)
    except (KeyError, TypeError, ValueError) as e:
        raise click.ClickException(f"malformed complex spec: {e}")
    hl.write_complex(cx, outdir)
    click.echo(
        json.dumps(
            {"out": outdir, "degrees": cx.degrees(), "total_dim": cx.total_dim()}
        )
    )


def _homology_rows(spec, lo: int, hi: int, do_stabilize: bool) -> list[dict]:
    rows = []
    cx = None if do_stabilize else hl.build_complex(spec)
    for d in range(lo, hi + 1):
        if do_stabilize:
            res = hl.stabilize(spec, d)
            group, used_spec = res.homology, res.spec
            row_extra = {"stage": len(res.history), "certified": res.certified}
        else:
            group, used_spec = cx.homology(d), cx.spec
            row_extra = {}
        rows.append(
            {
                "degree": d,
                "rank": group.rank,
                "torsion": list(group.torsion),
                "partial": group.partial,
                "spec": used_spec,
                **row_extra,
            }
        )
    return rows


@main.command(name="homology")
@click.option(
    "--spec",
    "spec_file",
    required=True,
    type=click.Path(exists=True, dir_okay=False),
    help="Complex description JSON (see README for the schema).",
)
@click.option("--degrees", "degrees_text", required=True, help="Inclusive range a..b.")
@click.option(
    "--stabilize",
    "do_stabilize",
    is_flag=True,
    help="Grow the truncation until each degree certifies, instead of one build.",
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["json", "table"]),
    default="json",
    show_default=True,
)
def homology_cmd(spec_file: str, degrees_text: str, do_stabilize: bool, fmt: str):
    """Homology groups of one complex, one row per degree."""
    spec = _load_json(spec_file, "complex spec")
    lo, hi = _parse_degrees(degrees_text)
    if isinstance(spec, dict) and spec.get("kind") in ("bar", "xaxis", "periodic"):
        spec.setdefault("degrees", [lo, hi])
    try:
        rows = _homology_rows(spec, lo, hi, do_stabilize)
    except (KeyError, TypeError, ValueError) as e:
        raise click.ClickException(f"malformed complex spec: {e}")
    if fmt == "json":
        for row in rows:
            click.echo(json.dumps(row, sort_keys=True))
        return
    click.echo(f"{'degree':>6}  {'rank':>4}  {'torsion':<12}  partial")
    for row in rows:
        tors = ",".join(str(t) for t in row["torsion"]) or "-"
        click.echo(
            f"{row['degree']:>6}  {row['rank']:>4}  {tors:<12}  "
            f"{'yes' if row['partial'] else 'no'}"
        )


def _print_table(report: vf.SuiteReport) -> None:
    click.echo(f"suite {report.suite}: {report.status} (seed {report.seed})")
    for c in report.checks:
        data = json.dumps(c.data, sort_keys=True)
        if len(data) > 100:
            data = data[:97] + "..."
        click.echo(f"  {c.check:<28} {c.status:<8} {c.description}")
        if c.status != "pass" or c.data:
            click.echo(f"  {'':<28} {'':<8} {data}")


@main.command(name="verify")
@click.argument("suite")
@click.option("--seed", default=0, type=int, show_default=True)
@click.option(
    "--budget",
    default=vf.DEFAULT_BUDGET,
    type=float,
    show_default=True,
    help="Wall-clock seconds allowed per suite.",
)
@click.option(
    "--strict", is_flag=True, help="Treat flagged (not-stabilized) checks as failures."
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["json", "table"]),
    default="json",
    show_default=True,
)
@click.pass_context
def verify_cmd(ctx, suite: str, seed: int, budget: float, strict: bool, fmt: str):
    """Run one named verification suite, or `all`."""
    names = vf.suite_names()
    if suite == "all":
        wanted = names
    elif suite in names:
        wanted = [suite]
    else:
        raise click.ClickException(
            f"unknown suite {suite!r}; choose from {', '.join(names + ['all'])}"
        )
    reports = vf.run_suites(wanted, seed=seed, budget=budget)
    if fmt == "json":
        payload = [r.to_json() for r in reports]
        click.echo(json.dumps(payload[0] if suite != "all" else payload, indent=2))
    else:
        for r in reports:
            _print_table(r)
    ctx.exit(max(r.exit_status(strict) for r in reports))


if __name__ == "__main__":
    main()
