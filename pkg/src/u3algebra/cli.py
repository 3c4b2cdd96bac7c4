"""Command-line front end.

Exit status: 0 when every requested check passes, 1 when a check fails
(a JSON failure record goes to stderr), 2 on invalid parameters.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .field import CycNum

ANCHORS = {
    "relations": "zeta^{g,k}_m from the recursion equals the t^m coefficient of F_{g,k}(t)",
    "dimension": "dim A_g / I_g <= (2g-1)^2 via standard-monomial census",
    "spectrum": "|E_{g,d}| = 3(2g-1)^2 and E_{g,d} is closed under the root-of-unity action",
    "blowup": "D_blowup = (1/3) e^{-t2^2/2 + t3^2} (cosh sqrt3 t2 + 2 cos sqrt3 t3) D, and its w+E variant",
    "conjugation": "w -> -w with t3 -> -t3 fixes the structure series",
    "elliptic": "((2/3)cosh(2 sqrt3 t2) - (2/3)cosh(-(2 pi i/3) w.f + 2 sqrt3 i t3))^{g-1} = sum d_ab e^{...}",
    "euler": "chi(framed instanton homology) = |H_1|^{N-1} via S_N orbit count",
    "alexander": "Delta(t2 t3) Delta(t2/t3) has coefficients A_{(a+b)/2} A_{(a-b)/2} (up to overall sign)",
    "verify-all": "acceptance criterion",
}


@dataclass
class RunConfig:
    command: str
    g_range: Tuple[int, int] = (1, 1)
    d: int = 1
    N: int = 3
    window: int = 4
    order: int = 8
    fmt: str = "json"
    out: Optional[str] = None
    timing: bool = True
    jobs: int = 1
    dual: bool = False
    group: Tuple[int, ...] = ()
    delta: Tuple[int, ...] = (1,)
    spec_path: Optional[str] = None
    wf: int = 0
    failures: List[dict] = field(default_factory=list)


def parse_range(text: str) -> Tuple[int, int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}")
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def parse_ints(text: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def _jsonable(v):
    if isinstance(v, CycNum):
        return v.to_json()
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    return v


def _flatten(prefix: str, v, out: dict):
    if isinstance(v, CycNum):
        for i, c in enumerate(v.coeffs):
            out[f"{prefix}_{i}"] = str(c)
    elif isinstance(v, dict):
        for k, x in v.items():
            _flatten(f"{prefix}.{k}" if prefix else str(k), x, out)
    elif isinstance(v, (list, tuple)):
        for i, x in enumerate(v):
            _flatten(f"{prefix}.{i}", x, out)
    else:
        out[prefix] = "" if v is None else v


def render(records: List[dict], fmt: str) -> str:
    if fmt == "json":
        return json.dumps(_jsonable(records), indent=2, sort_keys=True) + "\n"
    rows = []
    for r in records:
        flat: dict = {}
        for k, v in r.items():
            _flatten(k, v, flat)
        rows.append(flat)
    cols: List[str] = []
    for r in rows:
        for k in r:
            if k not in cols:
                cols.append(k)
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cols, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _fail(cfg: RunConfig, identity: str, inputs: dict, detail=None):
    cfg.failures.append({"anchor": ANCHORS[identity], "identity": identity, "inputs": inputs, "detail": detail})


def cmd_relations(cfg: RunConfig) -> List[dict]:
    from .mumford import InternalConsistencyError, cross_check, zeta_family

    recs = []
    lo, hi = cfg.g_range
    for g in range(lo, hi + 1):
        m_max = cfg.order if cfg.order >= 0 else 3 * g + 4
        for k in range(g + 1):
            try:
                cross_check(g, k, m_max, cfg.N, cfg.d, cfg.dual)
                agree = True
            except InternalConsistencyError as exc:
                agree = False
                _fail(cfg, "relations", {"g": g, "k": k, "N": cfg.N, "d": cfg.d}, str(exc))
            fam = zeta_family(g, k, m_max, cfg.N, cfg.d, cfg.dual)
            for m in range(m_max + 1):
                recs.append({
                    "anchor": ANCHORS["relations"], "g": g, "k": k, "m": m, "N": cfg.N, "d": cfg.d,
                    "dual": cfg.dual, "polynomial": fam[m].text(), "series_agrees": agree,
                })
    return recs


def _dimension_row(args) -> dict:
    g, window, timing = args
    from .spectrum import simple_type_census

    r = simple_type_census(g, window)
    return {
        "anchor": ANCHORS["dimension"], "g": g, "window_used": r.window_used,
        "standard_monomial_count": r.standard_monomial_count, "expected": r.expected,
        "match": r.match, "message": r.message, "elapsed_ms": r.elapsed_ms if timing else None,
    }


def cmd_dimension(cfg: RunConfig) -> List[dict]:
    lo, hi = cfg.g_range
    work = [(g, cfg.window, cfg.timing) for g in range(lo, hi + 1)]
    if cfg.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            rows = list(ex.map(_dimension_row, work))
    else:
        rows = [_dimension_row(w) for w in work]
    for r in rows:
        if not r["match"]:
            _fail(cfg, "dimension", {"g": r["g"], "window": cfg.window}, r["message"])
    return rows


def cmd_spectrum(cfg: RunConfig) -> List[dict]:
    from .spectrum import c_lattice, eigen_tuple, eigenvalue_set, evaction

    recs = []
    lo, hi = cfg.g_range
    for g in range(lo, hi + 1):
        E = eigenvalue_set(g, cfg.d)
        closed = all({evaction(l, 3, r) for l in E} == E for r in range(6))
        if len(E) != 3 * (2 * g - 1) ** 2 or not closed:
            _fail(cfg, "spectrum", {"g": g, "d": cfg.d}, {"size": len(E), "closed": closed})
        for k in range(3):
            for a, b in sorted(c_lattice(g)):
                recs.append({
                    "anchor": ANCHORS["spectrum"], "g": g, "d": cfg.d, "k": k, "a": a, "b": b,
                    "epsilon_exponent": (b + cfg.d * k) % 3,
                    "tuple": list(eigen_tuple(k, a, b).values),
                })
    return recs


def cmd_series(cfg: RunConfig) -> List[dict]:
    from .invariants import DonaldsonSpec, conjugation_symmetry, elliptic_report, k3_spec, verify_blowup

    if cfg.spec_path:
        with open(cfg.spec_path) as fh:
            spec = DonaldsonSpec.from_json(json.load(fh))
    else:
        spec = k3_spec()
    spec.validate()
    recs = []
    for shift in ("plain", "through_E"):
        r = verify_blowup(spec, cfg.order, shift)
        recs.append({"anchor": ANCHORS["blowup"], "check": "blowup", "shift": shift, "order": cfg.order, "passed": r["passed"]})
        if not r["passed"]:
            _fail(cfg, "blowup", {"shift": shift, "order": cfg.order, "spec": spec.to_json()})
    b = spec.b
    gamma = [l + 1 for l in range(b)]
    lam = [(-1) ** l for l in range(b)]
    ok = conjugation_symmetry(spec, gamma, lam, cfg.order)
    recs.append({"anchor": ANCHORS["conjugation"], "check": "conjugation", "order": cfg.order, "passed": ok})
    if not ok:
        _fail(cfg, "conjugation", {"spec": spec.to_json()})
    lo, hi = cfg.g_range
    for g in range(lo, hi + 1):
        r = elliptic_report(g, cfg.wf)
        passed = r["support_ok"] and r["parity_ok"] and r["methods_agree"]
        recs.append({
            "anchor": ANCHORS["elliptic"], "check": "elliptic", "g": g, "wf": cfg.wf % 3,
            "passed": passed, "support_ok": r["support_ok"], "parity_ok": r["parity_ok"],
            "methods_agree": r["methods_agree"],
            "d_top_expanded": r["d_top_expanded"], "d_top_stated": r["d_top_stated"],
            "d_top_agree": r["d_top_agree"],
            "coefficients": [{"a": a, "b": bb, "d": v} for (a, bb), v in r["coefficients"].items()],
        })
        if not passed:
            _fail(cfg, "elliptic", {"g": g, "wf": cfg.wf})
    return recs


def cmd_euler(cfg: RunConfig) -> List[dict]:
    from .invariants import FinAbGroup, framed_euler_char

    H = FinAbGroup(tuple(cfg.group))
    direct = framed_euler_char(H, cfg.N, "direct")
    orbit = framed_euler_char(H, cfg.N, "orbit_formula")
    rec = {"anchor": ANCHORS["euler"], "group": list(H.orders), "N": cfg.N,
           "direct": direct, "orbit_formula": orbit, "match": direct == orbit}
    if direct != orbit:
        _fail(cfg, "euler", {"group": list(H.orders), "N": cfg.N}, rec)
    return [rec]


def cmd_alexander(cfg: RunConfig) -> List[dict]:
    from .invariants import AlexPoly, alexander_u3

    delta = AlexPoly.from_list(cfg.delta)
    prod = alexander_u3(delta, "product")
    rule = alexander_u3(delta, "coefficient_rule")
    if prod != rule:
        _fail(cfg, "alexander", {"delta": list(cfg.delta)})
    return [{"anchor": ANCHORS["alexander"], "a": a, "b": b, "coefficient": v, "modes_agree": prod == rule,
             "sign": "up to overall sign"} for (a, b), v in prod.items()]


def _strip_timing(v):
    if isinstance(v, dict):
        return {k: None if k in ("elapsed_s", "elapsed_ms") else _strip_timing(x) for k, x in v.items()}
    if isinstance(v, list):
        return [_strip_timing(x) for x in v]
    return v


def cmd_verify_all(cfg: RunConfig) -> List[dict]:
    from .acceptance import run_all

    recs = []
    for r in run_all():
        r = _strip_timing(r) if not cfg.timing else dict(r)
        r["anchor"] = ANCHORS["verify-all"] + f" {r['criterion']}: {r['name']}"
        recs.append(r)
        if not r["passed"]:
            _fail(cfg, "verify-all", {"criterion": r["criterion"]}, r["detail"])
    return recs


COMMANDS = {
    "relations": cmd_relations,
    "dimension": cmd_dimension,
    "spectrum": cmd_spectrum,
    "series": cmd_series,
    "euler": cmd_euler,
    "alexander": cmd_alexander,
    "verify-all": cmd_verify_all,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="u3algebra", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", default=None, help="write to this path instead of stdout")
    common.add_argument("--no-timing", action="store_true", help="emit null timings for byte-identical output")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("relations", parents=[common], help="zeta tables")
    s.add_argument("--g", type=parse_range, default=(1, 1))
    s.add_argument("--N", type=int, default=3)
    s.add_argument("--d", type=int, default=1, help="d' with 1 <= d' < N")
    s.add_argument("--order", type=int, default=-1, help="largest m (default 3g+4)")
    s.add_argument("--dual", action="store_true")

    s = sub.add_parser("dimension", parents=[common], help="standard-monomial census per g")
    s.add_argument("--g", type=parse_range, default=(1, 3))
    s.add_argument("--window", type=int, default=4)
    s.add_argument("--jobs", type=int, default=1)

    s = sub.add_parser("spectrum", parents=[common], help="eigenvalue set enumeration")
    s.add_argument("--g", type=parse_range, default=(1, 1))
    s.add_argument("--d", type=int, default=1)

    s = sub.add_parser("series", parents=[common], help="structure, blowup and elliptic checks")
    s.add_argument("--spec", dest="spec_path", default=None, help="JSON file with Q, K, c, w")
    s.add_argument("--order", type=int, default=8)
    s.add_argument("--g", type=parse_range, default=(1, 3), help="genus range for the elliptic expansion")
    s.add_argument("--wf", type=int, default=0)

    s = sub.add_parser("euler", parents=[common], help="framed Euler characteristic")
    s.add_argument("--group", type=parse_ints, default=(), help="cyclic orders, e.g. 2,4")
    s.add_argument("--N", type=int, default=3)

    s = sub.add_parser("alexander", parents=[common], help="two-variable Alexander product")
    s.add_argument("--delta", type=parse_ints, default=(1,), help="centered coefficients, e.g. 1,-1,1")

    sub.add_parser("verify-all", parents=[common], help="run the acceptance suite")
    return p


def make_config(ns: argparse.Namespace, parser: argparse.ArgumentParser) -> RunConfig:
    cfg = RunConfig(command=ns.command, fmt=ns.format, out=ns.out, timing=not ns.no_timing)
    for name in ("d", "N", "window", "order", "jobs", "dual", "group", "delta", "spec_path", "wf"):
        if hasattr(ns, name):
            setattr(cfg, name, getattr(ns, name))
    if hasattr(ns, "g"):
        cfg.g_range = ns.g
    if cfg.g_range[0] < 1:
        parser.error("--g must be at least 1")
    if cfg.command == "relations":
        if cfg.N < 2:
            parser.error("--N must be at least 2")
        if not 1 <= cfg.d < cfg.N:
            parser.error("--d must satisfy 1 <= d' < N")
    if cfg.command == "spectrum" and cfg.d % 3 == 0:
        parser.error("--d must be coprime to 3")
    if cfg.command == "dimension" and (cfg.window < 0 or cfg.jobs < 1):
        parser.error("--window must be >= 0 and --jobs >= 1")
    if cfg.command == "series" and cfg.order < 1:
        parser.error("--order must be at least 1")
    if cfg.command == "euler":
        if cfg.N < 2:
            parser.error("--N must be at least 2")
        if any(n < 1 for n in cfg.group):
            parser.error("--group orders must be positive")
    if cfg.command == "alexander":
        if len(cfg.delta) % 2 == 0:
            parser.error("--delta needs an odd number of centered coefficients")
        n = len(cfg.delta)
        if any(cfg.delta[i] != cfg.delta[n - 1 - i] for i in range(n)):
            parser.error("--delta must be symmetric")
        if abs(sum(cfg.delta)) != 1:
            parser.error("--delta must satisfy Delta(1) = +-1")
    return cfg


def run(cfg: RunConfig) -> int:
    records = COMMANDS[cfg.command](cfg)
    text = render(records, cfg.fmt)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if cfg.failures:
        sys.stderr.write(json.dumps(_jsonable(cfg.failures), sort_keys=True) + "\n")
        return 1
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = make_config(ns, parser)
    try:
        return run(cfg)
    except ValueError as exc:
        parser.error(str(exc))
    return 2


if __name__ == "__main__":
    sys.exit(main())
