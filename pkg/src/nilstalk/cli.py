"""Command-line interface: ``nilstalk <command> ...``.

Exit status: 0 on success, 2 on usage or parse errors, 3 on domain errors
(for instance an inadmissible characteristic).  Diagnostics go to stderr as
one line each.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor

from .decmatrix import DECOMPOSITION_CASES, decomposition_matrix, symmetric_group_submatrix
from .errors import NilstalkError
from .gradedz import CoefficientSpec, GradedGroup, INTEGERS, change_coefficients, prime_field
from .gysin import complement_cohomology, cotangent_euler_action, line_bundle_action_on_projective
from .intlinalg import is_prime
from .kostka import QPolynomial, char0_ic_stalk_poly, kostka_foulkes
from .partitions import Partition, conjugate, orbit_dim, partitions_of
from .resolutions import REGISTRY, pushforward_stalk_table, registered
from .spaces import SpaceDescriptor, cohomology
from .stalkcalc import CASE_NAMES, CaseId, ic_stalk_table, sl3_link_tables, sl4_link_tables
from .stalktable import StalkTable

FORMATS = ("table", "json", "csv")
PROG = "nilstalk"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- argument types ---------------------------------------------------------

def _typed(fn, what):
    def convert(text):
        try:
            return fn(text)
        except (NilstalkError, ValueError) as exc:
            raise argparse.ArgumentTypeError(f"bad {what} {text!r}: {exc}") from None
    convert.__name__ = what
    return convert


partition_arg = _typed(Partition.parse, "partition")
coeff_arg = _typed(CoefficientSpec.parse, "coefficients")


def _prime(text):
    p = int(text)
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


prime_arg = _typed(_prime, "prime")


def parse_sweep(text: str) -> list[int]:
    """``p=2..13`` -> primes in the closed range."""
    m = re.fullmatch(r"\s*p\s*=\s*(\d+)\s*\.\.\s*(\d+)\s*", text)
    if not m:
        raise ValueError("expected p=LO..HI")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise ValueError("empty range")
    return [p for p in range(lo, hi + 1) if is_prime(p)]


sweep_arg = _typed(parse_sweep, "sweep")


def parse_space(text: str):
    """Space descriptor, or ``complement-cotangent:<space>`` / ``complement-line:m,c``."""
    if text.startswith("complement-cotangent:"):
        return cotangent_euler_action(SpaceDescriptor.parse(text.split(":", 1)[1]))
    if text.startswith("complement-line:"):
        m, c = (int(x) for x in text.split(":", 1)[1].split(","))
        return line_bundle_action_on_projective(m, c)
    return SpaceDescriptor.parse(text)


space_arg = _typed(parse_space, "space")


# -- configuration ----------------------------------------------------------

def read_config(path: str | None) -> dict[str, str]:
    """``key = value`` lines; ``#`` starts a comment."""
    if not path:
        return {}
    out = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise UsageError(f"config line without '=': {line!r}")
            out[key.strip().lower()] = value.strip()
    return out


def resolve_format(flag: str | None, config: dict[str, str]) -> str:
    fmt = flag or os.environ.get("NILSTALK_FORMAT") or config.get("format") or "table"
    fmt = fmt.lower()
    if fmt not in FORMATS:
        raise UsageError(f"unknown format {fmt!r} (choose from {', '.join(FORMATS)})")
    return fmt


# -- rendering --------------------------------------------------------------

def _grid(rows: list[list[str]]) -> str:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join(
        "  ".join(cell.rjust(w) if i else cell.ljust(w) for i, (cell, w) in enumerate(zip(r, widths))).rstrip()
        for r in rows
    )


def render_graded_table(groups: dict[str, GradedGroup]) -> str:
    degs = sorted({d for g in groups.values() for d in g.degrees})
    if not degs:
        degs = [0]
    lo, hi = degs[0], degs[-1]
    rows = [[""] + [str(d) for d in range(lo, hi + 1)]]
    for name, g in groups.items():
        rows.append([name] + [g[d].render(g.coefficients) for d in range(lo, hi + 1)])
    return _grid(rows)


def render_stalk_table(t: StalkTable) -> str:
    lo, hi = t.degree_range()
    head = f"# {t.title} (perversity {t.perversity})" if t.title else f"# perversity {t.perversity}"
    rows = [["stratum", "dim"] + [str(d) for d in range(lo, hi + 1)]]
    for s in t.strata:
        label = f"{s.name} ({s.label})" if s.name else str(s.label)
        rows.append([label, str(s.dim)] + [s.stalk[d].render(t.coefficients) for d in range(lo, hi + 1)])
    return head + "\n" + _grid(rows)


def _csv(rows: list[list]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue().rstrip("\n")


def stalk_table_csv(t: StalkTable) -> str:
    rows = [["label", "dim", "degree", "rank", "torsion"]]
    for s in t.strata:
        for d, g in s.stalk.groups.items():
            rows.append([str(s.label), s.dim, d, g.rank, ";".join(map(str, g.torsion))])
    return _csv(rows)


def graded_csv(groups: dict[str, GradedGroup]) -> str:
    rows = [["name", "degree", "rank", "torsion"]]
    for name, g in groups.items():
        for d, grp in g.groups.items():
            rows.append([name, d, grp.rank, ";".join(map(str, grp.torsion))])
    return _csv(rows)


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=False, indent=2)


# -- commands ---------------------------------------------------------------
# Each command returns (table_text, json_obj, csv_text).

def cmd_orbits(n: int):
    rows = [["orbit", "dim", "springer"]]
    data = []
    for lam in partitions_of(n):
        rows.append([str(lam), str(orbit_dim(lam)), str(conjugate(lam))])
        data.append({"label": str(lam), "dim": orbit_dim(lam), "springer": str(conjugate(lam))})
    return _grid(rows), {"n": n, "orbits": data}, _csv(rows)


def cmd_stalks(case: str, n: int | None, coeff: CoefficientSpec, perversity: str, route: str = "uct"):
    t = ic_stalk_table(CaseId(case, n), coeff, perversity, route)
    return render_stalk_table(t), t.to_json(), stalk_table_csv(t)


def cmd_links(case: str, coeff: CoefficientSpec):
    tables = {"sl3-cone": sl3_link_tables, "sl4-two-two": sl4_link_tables}
    if case not in tables:
        raise UsageError(f"links are available for {', '.join(tables)}")
    groups = tables[case](coeff)
    shown = {k: (change_coefficients(g, coeff) if g.coefficients == INTEGERS else g) for k, g in groups.items()}
    js = {k: {"coefficients": str(g.coefficients), "groups": g.to_json()} for k, g in shown.items()}
    return render_graded_table(shown), js, graded_csv(shown)


def cmd_pushforward(name: str, n: int | None, coeff: CoefficientSpec):
    t = pushforward_stalk_table(registered(name, n), coeff)
    return render_stalk_table(t), t.to_json(), stalk_table_csv(t)


def cmd_cohom(space, coeff: CoefficientSpec):
    if isinstance(space, SpaceDescriptor):
        integral, name = cohomology(space), str(space)
    else:
        integral, name = complement_cohomology(space), space.label
    g = integral if coeff == INTEGERS else change_coefficients(integral, coeff)
    js = {"space": name, "coefficients": str(coeff), "groups": g.to_json()}
    return render_graded_table({name: g}), js, graded_csv({name: g})


def _poly_out(label: str, lam: Partition, mu: Partition, poly: QPolynomial):
    js = {"lambda": str(lam), "mu": str(mu), label: poly.to_json()}
    return str(poly), js, _csv([["lambda", "mu", "exponent", "coefficient"]] + [
        [str(lam), str(mu), e, c] for e, c in poly.coefficients.items()
    ])


def cmd_kostka(lam: Partition, mu: Partition):
    return _poly_out("kostka_foulkes", lam, mu, kostka_foulkes(lam, mu))


def cmd_ic0(lam: Partition, mu: Partition):
    return _poly_out("ic_stalk", lam, mu, char0_ic_stalk_poly(lam, mu))


def cmd_decmatrix(case: str, p: int, n: int | None = None, symmetric_group: bool = False):
    d = decomposition_matrix(case, p, n)
    if symmetric_group:
        d = symmetric_group_submatrix(d, p)
    rows = [[""] + list(d.cols)] + [[r] + list(map(str, e)) for r, e in zip(d.rows, d.entries)]
    return d.render(), d.to_json(), _csv(rows)


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=None, help="output format")
    common.add_argument("--config", default=None, help="optional key=value file (format, sweep)")

    parser = _Parser(prog=PROG, description="IC stalks on nilpotent orbit closures.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("orbits", parents=[common], help="list nilpotent orbits of sl_n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("stalks", parents=[common], help="IC stalk table of a case study")
    p.add_argument("--case", choices=CASE_NAMES, required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--coeff", type=coeff_arg, default=None)
    p.add_argument("--perversity", choices=("p", "p+"), default="p")
    p.add_argument("--route", choices=("uct", "direct"), default="uct")
    p.add_argument("--sweep", type=sweep_arg, default=None, help="e.g. p=2..13")

    p = sub.add_parser("links", parents=[common], help="intermediate link cohomology for sl3-cone / sl4-two-two")
    p.add_argument("--case", choices=("sl3-cone", "sl4-two-two"), required=True)
    p.add_argument("--coeff", type=coeff_arg, required=True)

    p = sub.add_parser("pushforward", parents=[common], help="stalks of a registered resolution's pushforward")
    p.add_argument("--resolution", choices=tuple(REGISTRY), required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--coeff", type=coeff_arg, default=INTEGERS)

    p = sub.add_parser("cohom", parents=[common], help="cohomology of a space")
    p.add_argument("--space", type=space_arg, required=True)
    p.add_argument("--coeff", type=coeff_arg, default=INTEGERS)

    for name in ("kostka", "ic0"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--lambda", dest="lam", type=partition_arg, required=True)
        p.add_argument("--mu", type=partition_arg, required=True)

    p = sub.add_parser("decmatrix", parents=[common], help="decomposition matrix")
    p.add_argument("--case", choices=DECOMPOSITION_CASES + ("sl2-cone", "sl3-cone", "sl4-22"), required=True)
    p.add_argument("--p", type=prime_arg, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--symmetric-group", action="store_true")
    p.add_argument("--sweep", type=sweep_arg, default=None)
    return parser


def _dispatch(args, prime: int | None = None):
    c = args.command
    if c == "orbits":
        if args.n < 1:
            raise UsageError("--n must be positive")
        return cmd_orbits(args.n)
    if c == "stalks":
        coeff = prime_field(prime) if prime is not None else args.coeff
        return cmd_stalks(args.case, args.n, coeff, args.perversity, args.route)
    if c == "links":
        return cmd_links(args.case, args.coeff)
    if c == "pushforward":
        return cmd_pushforward(args.resolution, args.n, args.coeff)
    if c == "cohom":
        return cmd_cohom(args.space, args.coeff)
    if c == "kostka":
        return cmd_kostka(args.lam, args.mu)
    if c == "ic0":
        return cmd_ic0(args.lam, args.mu)
    if c == "decmatrix":
        p = prime if prime is not None else args.p
        return cmd_decmatrix(args.case, p, args.n, args.symmetric_group)
    raise UsageError(f"unknown command {c}")


def _emit(out, fmt):
    text, js, csv_text = out
    if fmt == "json":
        return dumps(js)
    if fmt == "csv":
        return csv_text
    return text


def _run_sweep(args, primes, fmt, err):
    def job(p):
        try:
            return p, _dispatch(args, p), None
        except NilstalkError as exc:
            return p, None, str(exc)

    with ThreadPoolExecutor() as pool:
        results = list(pool.map(job, primes))  # map keeps prime order

    for p, _, msg in results:
        if msg is not None:
            print(f"{PROG}: p={p}: {msg}", file=err)
    if fmt == "json":
        return dumps({"sweep": [
            {"p": p, "result": out[1]} if out else {"p": p, "error": msg} for p, out, msg in results
        ]})
    blocks = []
    for p, out, msg in results:
        body = _emit(out, fmt) if out else f"(not computed: {msg})"
        blocks.append(f"== p={p} ==\n{body}")
    return "\n\n".join(blocks)


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = read_config(args.config or os.environ.get("NILSTALK_CONFIG"))
        fmt = resolve_format(args.format, config)
        sweep = getattr(args, "sweep", None)
        if sweep is None and "sweep" in config and args.command in ("stalks", "decmatrix") \
                and getattr(args, "coeff", None) is None and getattr(args, "p", None) is None:
            sweep = parse_sweep(config["sweep"])
        if args.command == "stalks" and sweep is None and args.coeff is None:
            raise UsageError("stalks needs --coeff or --sweep")
        if args.command == "decmatrix" and sweep is None and args.p is None:
            raise UsageError("decmatrix needs --p or --sweep")
        if sweep is not None:
            text = _run_sweep(args, sweep, fmt, err)
        else:
            text = _emit(_dispatch(args), fmt)
    except UsageError as exc:
        print(f"{PROG}: usage error: {exc}", file=err)
        return 2
    except (NilstalkError, ValueError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"{PROG}: error: {msg}", file=err)
        return 3
    print(text, file=out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
