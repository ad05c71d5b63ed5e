"""Command-line interface: ``cusp-radius <command> [options]``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import List, Optional


from . import __version__
from . import classes as C
from . import radii, series, verify
from .domain import EpicycloidDomain
from .inclusion import inclusion_constants

SAMPLES_ENV = "CUSP_RADIUS_SAMPLES"
DEFAULT_TOL = 1e-5


@dataclass
class CliConfig:
    n_list: List[int] = field(default_factory=lambda: [4, 6, 8])
    tol: float = DEFAULT_TOL
    samples: int = radii.ORACLE_SAMPLES
    output_format: str = "text"
    out_path: Optional[str] = None
    strict: bool = False
    verify: bool = False

    def __post_init__(self):
        for n in self.n_list:
            if n < 4 or n % 2:
                raise ValueError(f"n must be even and >= 4, got {n}")
        if self.samples < 1024:
            raise ValueError("samples must be >= 1024")
        if not 0 < self.tol <= 1e-2:
            raise ValueError("tol must lie in (0, 1e-2]")


def default_samples() -> int:
    env = os.environ.get(SAMPLES_ENV)
    return int(env) if env else radii.ORACLE_SAMPLES


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "yes" if x else "no"
    if isinstance(x, float):
        return f"{x:.6f}"
    return str(x)


def _emit(cfg: CliConfig, command: str, rows: List[dict], columns: List[str]) -> str:
    if cfg.output_format == "json":
        meta = {"version": __version__, "command": command, "config": asdict(cfg)}
        text = json.dumps({"meta": meta, "rows": rows}, indent=2) + "\n"
    elif cfg.output_format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        for row in rows:
            w.writerow([_fmt(row.get(c)) for c in columns])
        text = buf.getvalue()
    else:
        table = [columns] + [[_fmt(row.get(c)) for c in columns] for row in rows]
        widths = [max(len(r[i]) for r in table) for i in range(len(columns))]
        text = "".join("  ".join(v.ljust(wd) for v, wd in zip(r, widths)).rstrip() + "\n"
                       for r in table)
    _write(cfg, text)
    return text


def _write(cfg: CliConfig, text: str):
    if cfg.out_path:
        try:
            with open(cfg.out_path, "w", newline="") as fh:
                fh.write(text)
        except OSError as exc:
            raise SystemExit(f"cannot write {cfg.out_path}: {exc.strerror}") from None
    else:
        sys.stdout.write(text)


# -- commands ------------------------------------------------------------------

def cmd_table_radii(cfg: CliConfig) -> int:
    cells = [(c, n) for c in C.BACKWARD_TABLE_CLASSES for n in cfg.n_list]

    def work(cell):
        c, n = cell
        return radii.backward_radius(c, EpicycloidDomain(n), oracle=cfg.verify,
                                     samples=cfg.samples)

    with ThreadPoolExecutor() as pool:
        results = list(pool.map(work, cells))
    rows, ok = [], True
    for res in results:
        printed = radii.TABLE2[res.cls.tag][radii.TABLE2_N.index(res.n)] \
            if res.n in radii.TABLE2_N else None
        agree = None if printed is None else abs(res.closed_form - printed) <= cfg.tol
        row = {"class": res.cls.cli_id, "n": res.n, "closed_form": res.closed_form,
               "printed": printed, "agree_printed": agree,
               "provenance": {"closed_form": "closed_form", "printed": "printed"},
               "errata_note": res.errata_note}
        if agree is False:
            ok = False
        if cfg.verify:
            row.update(oracle=res.oracle, agree_oracle=res.agree)
            row["provenance"]["oracle"] = "oracle"
            ok = ok and bool(res.agree)
        rows.append(row)
    cols = ["class", "n", "closed_form", "printed", "agree_printed"]
    if cfg.verify:
        cols += ["oracle", "agree_oracle"]
    cols.append("errata_note")
    _emit(cfg, "table-radii", rows, cols)
    return 2 if cfg.strict and not ok else 0


def cmd_table_limits(cfg: CliConfig) -> int:
    rows = [r.to_dict() for r in radii.limit_table()]
    for row in rows:
        row["class"] = row["class"]["id"]
    _emit(cfg, "table-limits", rows,
          ["label", "printed_text", "printed", "computed", "agree", "consistent_row", "errata_note"])
    return 0


def curve_csv(n: int, samples: int) -> str:
    d = EpicycloidDomain(n)
    t, w = d.boundary_samples(samples)
    buf = io.StringIO()
    buf.write("t,x,y\n")
    for tt, ww in zip(t, w):
        buf.write(f"{tt + 0.0:.10f},{_unsigned(ww.real):.10f},{_unsigned(ww.imag):.10f}\n")
    return buf.getvalue()


def _unsigned(v: float, digits: int = 10) -> float:
    return round(float(v), digits) + 0.0


def curve_svg(n: int, samples: int) -> str:
    d = EpicycloidDomain(n)
    _, w = d.boundary_samples(samples)
    # SVG's y axis points down
    pts = " L".join(f"{p.real:.6f},{_unsigned(-p.imag, 6):.6f}" for p in w)
    cusps = [d.boundary(t) for t in d.cusps().angles]
    marks = "".join(
        f'  <circle class="cusp" cx="{b.x:.6f}" cy="{_unsigned(-b.y, 6):.6f}" r="0.015" fill="red"/>\n'
        for b in cusps)
    return ('<svg xmlns="http://www.w3.org/2000/svg" viewBox="-0.1 -1.1 2.2 2.2">\n'
            f'  <path d="M{pts} Z" fill="none" stroke="black" stroke-width="0.005"/>\n'
            f"{marks}</svg>\n")


def cmd_curve(cfg: CliConfig, n: int) -> int:
    if cfg.output_format == "svg":
        text = curve_svg(n, cfg.samples)
    elif cfg.output_format in ("csv", "text"):
        text = curve_csv(n, cfg.samples)
    else:
        raise SystemExit("curve supports --format csv or svg")
    _write(cfg, text)
    return 0


def cmd_verify(cfg: CliConfig, suites=None) -> int:
    results = verify.run_all(suites)
    rows = [r.to_dict() for r in results]
    if cfg.output_format in ("json", "text"):
        meta = {"version": __version__, "command": "verify", "config": asdict(cfg)}
        failures = sum(r.counts_as_failure for r in results)
        errata = sum(r.errata for r in results)
        summary = {"cases": len(results), "failures": failures, "errata": errata}
        _write(cfg, json.dumps({"meta": meta, "summary": summary, "rows": rows}, indent=2) + "\n")
    else:
        _emit(cfg, "verify", rows, ["suite", "case", "expected", "got", "tol", "pass", "errata",
                                    "errata_note"])
    return 1 if any(r.counts_as_failure for r in results) else 0


def cmd_inclusion(cfg: CliConfig) -> int:
    rows = [inclusion_constants(EpicycloidDomain(n)).to_dict() for n in cfg.n_list]
    _emit(cfg, "inclusion", rows, list(rows[0]))
    return 0


def cmd_coefficients(cfg: CliConfig) -> int:
    rows = []
    for n in cfg.n_list:
        rep = series.coefficient_bounds(n)
        for i in range(4):
            rows.append({"n": n, "index": i + 2, "bound": str(rep.bounds[i]),
                         "extremal": str(rep.extremal_values[i]), "agree": rep.agreement[i],
                         "errata_note": next((e for e in rep.errata if e.startswith(f"|a_{i + 2}|")),
                                             None)})
    _emit(cfg, "coefficients", rows, ["n", "index", "bound", "extremal", "agree", "errata_note"])
    return 0


def cmd_radius(cfg: CliConfig, cls: C.ComparatorClass, direction: str) -> int:
    rows, ok = [], True
    for n in cfg.n_list:
        d = EpicycloidDomain(n)
        fn = radii.forward_radius if direction == "forward" else radii.backward_radius
        res = fn(cls, d, oracle=cfg.verify, samples=cfg.samples)
        row = res.to_dict()
        row["class"] = cls.cli_id
        rows.append(row)
        ok = ok and res.agree is not False
    cols = ["class", "direction", "n", "closed_form", "oracle", "agree", "errata_note"]
    _emit(cfg, "radius", rows, cols)
    return 2 if cfg.strict and not ok else 0


# -- argument parsing -------------------------------------------------------------

def _n_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _params(items: List[str]) -> dict:
    out = {}
    for item in items or []:
        key, _, val = item.partition("=")
        if not _:
            raise SystemExit(f"--param expects key=value, got {item!r}")
        out[key] = float(val)
    return out


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_n_list, default=None,
                        help="comma-separated even n >= 4 (default 4,6,8)")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL)
    common.add_argument("--samples", type=int, default=None,
                        help=f"oracle/curve samples (default 2048, or ${SAMPLES_ENV})")
    common.add_argument("--format", dest="output_format", default="text",
                        choices=["text", "csv", "json", "svg"])
    common.add_argument("--out", dest="out_path", default=None)
    common.add_argument("--strict", action="store_true")
    common.add_argument("--verify", action="store_true")

    p = argparse.ArgumentParser(prog="cusp-radius",
                                description="Radius constants for the cusp (epicycloid) starlike class.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("table-radii", parents=[common], help="backward radii for n in --n")
    sub.add_parser("table-limits", parents=[common], help="closed forms at n = 10^6")
    sub.add_parser("curve", parents=[common], help="boundary curve as CSV or SVG")
    v = sub.add_parser("verify", parents=[common], help="run every verification suite")
    v.add_argument("--suite", action="append", choices=sorted(verify.SUITES))
    sub.add_parser("inclusion", parents=[common], help="inclusion constants")
    sub.add_parser("coefficients", parents=[common], help="coefficient bounds and extremal values")
    r = sub.add_parser("radius", parents=[common], help="one radius for one class")
    r.add_argument("--class", dest="cls", required=True, choices=C.cli_ids())
    r.add_argument("--param", action="append", help="class parameter, e.g. alpha=0.5")
    r.add_argument("--direction", choices=["forward", "backward"], default="forward")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    n_list = args.n or ([4] if args.command == "curve" else [4, 6, 8])
    try:
        cfg = CliConfig(n_list=n_list, tol=args.tol,
                        samples=args.samples if args.samples is not None else default_samples(),
                        output_format=args.output_format, out_path=args.out_path,
                        strict=args.strict, verify=args.verify)
    except ValueError as exc:
        print(f"cusp-radius: {exc}", file=sys.stderr)
        return 2
    if args.command == "table-radii":
        return cmd_table_radii(cfg)
    if args.command == "table-limits":
        return cmd_table_limits(cfg)
    if args.command == "curve":
        return cmd_curve(cfg, cfg.n_list[0])
    if args.command == "verify":
        return cmd_verify(cfg, args.suite)
    if args.command == "inclusion":
        return cmd_inclusion(cfg)
    if args.command == "coefficients":
        return cmd_coefficients(cfg)
    if args.command == "radius":
        try:
            cls = C.from_cli_id(args.cls, **_params(args.param))
        except (ValueError, KeyError) as exc:
            print(f"cusp-radius: {exc}", file=sys.stderr)
            return 2
        return cmd_radius(cfg, cls, args.direction)
    return 2  # pragma: no cover


def run() -> int:
    try:
        return main()
    except BrokenPipeError:
        # output piped into e.g. head; silence the flush on exit
        sys.stdout = open(os.devnull, "w")
        return 0


if __name__ == "__main__":
    sys.exit(run())
