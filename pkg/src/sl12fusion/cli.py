"""Command-line interface.

Fusion parameters default to z = 0, 1, 2, ... with kappa_0 = l1 and the
other kappas zero; override them with --z and --kappa.
Exit codes: 0 success, 1 a relation or check failed, 2 invalid input.
"""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from fractions import Fraction
from typing import List, Optional

import click

from . import verify as _verify
from .characters import (
    char_of,
    cv_char_formula,
    demazure_char_formula,
    truncated_char_formula,
    weyl_char_formula,
)
from .combinatorics import decomposition_check, descents, dim_identity_sides, partition, partitions
from .fusion import cv_spec, demazure_spec, fuse, truncated_spec, weyl_spec
from .modules import g0_decompose, is_irreducible, kac_b2
from .presentations import (
    CVDatum,
    check_cv_relations,
    check_demazure,
    check_truncated,
    check_weyl_relations,
)

EXIT_FAIL = 1
EXIT_USAGE = 2


class RationalType(click.ParamType):
    name = "rational"

    def convert(self, value, param, ctx):
        if isinstance(value, Fraction):
            return value
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a rational number (use p/q)", param, ctx)


class RationalListType(click.ParamType):
    name = "rationals"

    def convert(self, value, param, ctx):
        if isinstance(value, list):
            return value
        try:
            return [Fraction(x) for x in value.split(",") if x.strip()]
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a comma-separated list of rationals", param, ctx)


class PartitionType(click.ParamType):
    name = "partition"

    def convert(self, value, param, ctx):
        try:
            return partition([int(x) for x in value.split(",") if x.strip()])
        except ValueError as exc:
            self.fail(str(exc), param, ctx)


RATIONAL = RationalType()
RATIONALS = RationalListType()


def _write(text: str, output: Optional[str]) -> None:
    if output is None:
        click.echo(text, nl=not text.endswith("\n"))
        return
    target = os.path.abspath(output)
    fd, tmp = tempfile.mkstemp(dir=os.path.dirname(target), prefix=".tmp-")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        os.unlink(tmp)
        raise


def _render(payload: dict, rows: List[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=["suite", "case", "params", "expected", "computed", "pass"], lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow(r)
        return buf.getvalue()
    lines = []
    for k in sorted(payload):
        if k in ("cases", "character", "summary"):
            continue
        lines.append(f"{k}: {payload[k]}")
    if "character" in payload:
        lines.append("character:")
        for t in payload["character"]:
            deg = f"  t^{t['deg']}" if "deg" in t else ""
            lines.append(f"  {t['mult']:>5} e^({t['h1']},{t['h2']}){deg}")
    if rows:
        width = max(len(r["case"]) for r in rows)
        for r in rows:
            mark = "PASS" if r["pass"] else "FAIL"
            lines.append(f"{mark}  {r['suite']:<13} {r['case']:<{width}}  {r['params']}")
    lines.append(payload["summary"])
    return "\n".join(lines) + "\n"


def _finish(ctx, payload: dict, rows: List[dict], fmt: str, output: Optional[str]) -> None:
    good = sum(r["pass"] for r in rows)
    payload["summary"] = f"{'PASS' if good == len(rows) else 'FAIL'} {good}/{len(rows)}"
    payload["cases"] = rows
    _write(_render(payload, rows, fmt), output)
    ctx.exit(0 if good == len(rows) else EXIT_FAIL)


def _spec_or_usage(builder, *args, z=None, kappa=None):
    try:
        return builder(*args, z=z or None, kappa=kappa or None)
    except ValueError as exc:
        raise click.UsageError(str(exc))


def _fusion_payload(name: str, G, expected_char, report, expected_dim: int) -> tuple:
    payload = {
        "module": name,
        "dim": G.dim,
        "graded_dims": list(G.graded_dims),
        "character_mass": G.character().mass,
        "character": G.graded_character().to_records(),
        "relations": report.summary(),
    }
    rows = [
        _verify._case(name, "dim", "", expected_dim, G.dim).to_record(),
        _verify._case(name, "character formula", "", True, G.character() == expected_char).to_record(),
        _verify._case(name, "relations", report.case, True, report.ok).to_record(),
    ]
    return payload, rows


def common(f):
    f = click.option("--format", "fmt", type=click.Choice(["table", "json", "csv"]), default="table", show_default=True)(f)
    f = click.option("--output", "-o", type=click.Path(dir_okay=False), default=None, help="Write to a file (atomically).")(f)
    return f


def fusion_options(f):
    f = click.option("--z", type=RATIONALS, default=None, help="Fusion points, e.g. 0,1,2 (default 0,1,2,...).")(f)
    f = click.option("--kappa", type=RATIONALS, default=None, help="h1-weights of the factors; must sum to lambda1.")(f)
    return f


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Exact computations with fusion products of sl(1|2)[t]-modules."""


@main.command()
@click.option("--lambda1", type=RATIONAL, required=True)
@click.option("--lambda2", type=click.IntRange(min=0), required=True)
@common
@click.pass_context
def kac(ctx, lambda1, lambda2, fmt, output):
    """Kac module for the Borel b(2)."""
    try:
        cm = kac_b2((lambda1, lambda2))
    except ValueError as exc:
        raise click.UsageError(str(exc))
    from .algebra import is_typical

    payload = {
        "module": "kac",
        "dim": cm.dim,
        "irreducible": is_irreducible(cm),
        "g0_summands": [f"({a},{b})" for a, b in sorted(g0_decompose(cm.module))],
        "character": char_of(cm).to_records(),
    }
    rows = []
    if lambda2 >= 1:
        rows.append(_verify._case("kac", "dim", "", 4 * lambda2, cm.dim).to_record())
        rows.append(_verify._case("kac", "irreducible iff typical", "", is_typical((lambda1, lambda2)), payload["irreducible"]).to_record())
    _finish(ctx, payload, rows, fmt, output)


@main.command()
@click.option("--lambda1", type=RATIONAL, required=True)
@click.option("--lambda2", type=click.IntRange(min=1), required=True)
@fusion_options
@common
@click.pass_context
def weyl(ctx, lambda1, lambda2, z, kappa, fmt, output):
    """Graded local Weyl module as a fusion of lambda2 Kac modules of size 1."""
    G = fuse(_spec_or_usage(weyl_spec, lambda1, lambda2, z=z, kappa=kappa))
    report = check_weyl_relations(G, (lambda1, lambda2))
    payload, rows = _fusion_payload("weyl", G, weyl_char_formula(lambda1, lambda2), report, 4**lambda2)
    _finish(ctx, payload, rows, fmt, output)


@main.command()
@click.option("--lambda1", type=RATIONAL, required=True)
@click.option("--xi", type=PartitionType(), required=True, help="Partition, e.g. 2,1.")
@fusion_options
@common
@click.pass_context
def cv(ctx, lambda1, xi, z, kappa, fmt, output):
    """Chari-Venkatesh type module V(lambda1, xi)."""
    if not xi:
        raise click.UsageError("xi must be a nonempty partition")
    G = fuse(_spec_or_usage(cv_spec, lambda1, xi, z=z, kappa=kappa))
    from math import prod

    report = check_cv_relations(G, CVDatum(lambda1, xi))
    payload, rows = _fusion_payload("cv", G, cv_char_formula(lambda1, xi), report, 4 ** len(xi) * prod(xi))
    _finish(ctx, payload, rows, fmt, output)


@main.command()
@click.option("--ell", type=click.IntRange(min=1), required=True)
@click.option("--lambda1", type=RATIONAL, required=True)
@click.option("--lambda2", type=click.IntRange(min=1), required=True)
@fusion_options
@common
@click.pass_context
def demazure(ctx, ell, lambda1, lambda2, z, kappa, fmt, output):
    """Demazure-type module D(ell, lambda)."""
    spec = _spec_or_usage(demazure_spec, ell, lambda1, lambda2, z=z, kappa=kappa)
    G = fuse(spec)
    q = len(spec.factors)
    m = spec.factors[-1][1]
    report = check_demazure(G, ell, (lambda1, lambda2))
    payload, rows = _fusion_payload("demazure", G, demazure_char_formula(ell, lambda1, lambda2), report, 4**q * ell ** (q - 1) * m)
    _finish(ctx, payload, rows, fmt, output)


@main.command()
@click.option("--N", "N", type=click.IntRange(min=1), required=True)
@click.option("--lambda1", type=RATIONAL, required=True)
@click.option("--lambda2", type=click.IntRange(min=1), required=True)
@fusion_options
@common
@click.pass_context
def truncated(ctx, N, lambda1, lambda2, z, kappa, fmt, output):
    """Truncated local Weyl module W(lambda, N)."""
    G = fuse(_spec_or_usage(truncated_spec, N, lambda1, lambda2, z=z, kappa=kappa))
    report = check_truncated(G, N, (lambda1, lambda2))
    if N < lambda2:
        q, m = divmod(lambda2, N)
        expected = (truncated_char_formula(N, lambda1, lambda2), 4**N * q ** (N - m) * (q + 1) ** m)
    else:
        expected = (weyl_char_formula(lambda1, lambda2), 4**lambda2)
    payload, rows = _fusion_payload("truncated", G, expected[0], report, expected[1])
    _finish(ctx, payload, rows, fmt, output)


@main.command("verify")
@click.option(
    "--suite",
    "suites",
    multiple=True,
    type=click.Choice(sorted(_verify.SUITES) + ["all"]),
    default=("all",),
    show_default=True,
)
@click.option("--max-lambda2", type=click.IntRange(min=1, max=6), default=3, show_default=True)
@click.option("--max-n", type=click.IntRange(min=0, max=9), default=8, show_default=True)
@common
@click.pass_context
def verify_cmd(ctx, suites, max_lambda2, max_n, fmt, output):
    """Run verification suites; prints PASS k/k."""
    cases = _verify.run(list(suites), max_l2=max_lambda2, max_n=max_n)
    rows = [c.to_record() for c in cases]
    payload = {"suites": list(suites), "max_lambda2": max_lambda2, "max_n": max_n}
    _finish(ctx, payload, rows, fmt, output)


@main.command()
@click.option("--check", type=click.Choice(["dim-identity", "decomposition"]), default="dim-identity", show_default=True)
@click.option("--max-n", type=click.IntRange(min=0, max=10), default=8, show_default=True)
@common
@click.pass_context
def combinatorics(ctx, check, max_n, fmt, output):
    """Partition identities behind the dimension counts."""
    rows = []
    for n in range(max_n + 1):
        for xi in partitions(n):
            if check == "dim-identity":
                left, right = dim_identity_sides(xi)
                rows.append(_verify._case("combinatorics", "dim identity", xi, right, left).to_record())
            else:
                for t in descents(xi):
                    rows.append(_verify._case("combinatorics", "I decomposition", f"{xi},t={t}", True, decomposition_check(xi, t)).to_record())
    _finish(ctx, {"check": check, "max_n": max_n}, rows, fmt, output)


if __name__ == "__main__":  # pragma: no cover
    main()
