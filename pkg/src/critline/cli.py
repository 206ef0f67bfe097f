"""Command-line interface: zero scans, verification suites, and window
proportion sweeps, with CSV/JSON reports.

Exit codes: 0 all asserted checks passed, 2 configuration error, 3 internal
budget failure.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor

from . import __version__
from .dirchar import DiscriminantSplit, is_fundamental
from .lseries import lseries_from_form, scan_zeros, window_test
from .mollifier import alpha_table
from .quadfield import QuadForm, class_group
from .verify import SUITES, run_suite


class ConfigError(Exception):
    pass


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.15g}"
    if isinstance(x, complex):
        return f"{x.real:.15g}{x.imag:+.15g}j"
    return str(x)


def write_report(rows: list[dict], columns: list[str], config: dict,
                 out_path: str | None, fmt: str, t_wall: float) -> None:
    lines = [",".join(columns)]
    for r in rows:
        lines.append(",".join(_fmt(r.get(c, "")) for c in columns))
    csv_text = "\n".join(lines) + "\n"
    if fmt == "csv":
        text = csv_text
    else:
        payload = {
            "metadata": {
                "version": __version__,
                "config": {k: str(v) for k, v in config.items()},
                "wall_time_s": round(t_wall, 3),
            },
            "rows": [{c: r.get(c, "") for c in columns} for r in rows],
        }
        text = json.dumps(payload, indent=2, default=_fmt) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _target_series(cfg):
    """The Epstein zeta numerator series for --form, or the principal form
    of --disc when no form is given."""
    if cfg.get("form"):
        a, b, c = cfg["form"]
        form = QuadForm(a, b, c)
        if not is_fundamental(form.disc):
            raise ConfigError(f"form discriminant {form.disc} is not fundamental")
        return lseries_from_form(form), form
    disc = cfg.get("disc")
    if disc is None:
        raise ConfigError("need --disc or --form")
    if disc >= 0 or not is_fundamental(disc):
        raise ConfigError(f"{disc} is not a negative fundamental discriminant")
    forms = class_group(disc).forms
    form = forms[class_group(disc).identity_index]
    return lseries_from_form(form), form


def cmd_zeros(cfg) -> int:
    t1, t2 = cfg["t_min"], cfg["t_max"]
    if not t1 < t2:
        raise ConfigError("need t-min < t-max")
    series, form = _target_series(cfg)
    t_start = time.time()
    res = scan_zeros(series, t1, t2, step_scale=cfg.get("step_scale", 1.0))
    rows = [{"t": z, "width": w, "certified": 1} for z, w in res.zeros]
    rows.append({"t": "", "width": "", "certified": "",
                 "count": res.count, "t_min": t1, "t_max": t2,
                 "max_step": res.max_step, "n_evals": res.n_evals,
                 "form": f"({form.a} {form.b} {form.c})"})
    write_report(rows, ["t", "width", "certified", "count", "t_min", "t_max",
                        "max_step", "n_evals", "form"],
                 cfg, cfg.get("out"), cfg.get("format", "csv"), time.time() - t_start)
    return 0


def cmd_verify(cfg) -> int:
    name = cfg.get("suite")
    if not name or name not in SUITES:
        raise ConfigError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    t_start = time.time()
    rows = run_suite(name)
    write_report(rows, ["suite", "name", "params", "measured", "bound", "passed",
                        "elapsed_s"],
                 cfg, cfg.get("out"), cfg.get("format", "csv"), time.time() - t_start)
    return 0 if all(r["passed"] for r in rows) else 1


def _window_worker(args):
    series, mol, t, h, t_param = args
    res = window_test(series, t, h, mollifier=mol, T_param=t_param)
    return {"t": t, "H": h, "I_scaled": res["I_scaled"], "J_scaled": res["J_scaled"],
            "log_scale": res["log_scale"], "certified": int(res["certified"]),
            "zeros_found": res["zeros_found"], "mollified": int(mol is not None)}


def cmd_scan_proportion(cfg) -> int:
    t1, t2, h = cfg["t_min"], cfg["t_max"], cfg.get("H", 1.0)
    if not (t1 < t2 and h > 0):
        raise ConfigError("need t-min < t-max and H > 0")
    t_param = cfg.get("T", max(abs(t2), 100.0))
    series, form = _target_series(cfg)
    mol = None
    if cfg.get("X"):
        x = cfg["X"]
        if cfg.get("theorem2_guard") and x > t_param ** (1.0 / 50.0) * 1.5:
            raise ConfigError(f"X={x} exceeds T^(1/50) for the sweep")
        split = DiscriminantSplit(1, form.disc)
        mol = alpha_table(split, float(x))
    t_start = time.time()
    starts = []
    t = t1
    while t < t2 - 1e-12:
        starts.append(t)
        t += h
    jobs = [(series, m, t0, h, t_param)
            for m in ([None, mol] if mol is not None else [None])
            for t0 in starts]
    done = {}
    ckpt_path = (cfg.get("out") or "scan") + ".checkpoint.json"
    if cfg.get("resume") and os.path.exists(ckpt_path):
        with open(ckpt_path) as fh:
            for r in json.load(fh):
                done[(r["t"], r["mollified"])] = r
    todo = [j for j in jobs if (j[2], int(j[1] is not None)) not in done]
    rows = list(done.values())
    n_threads = cfg.get("threads") or os.cpu_count() or 1
    ckpt_every = 10**4
    with ThreadPoolExecutor(max_workers=n_threads) as pool:
        for i, r in enumerate(pool.map(_window_worker, todo)):
            rows.append(r)
            if (i + 1) % ckpt_every == 0:
                with open(ckpt_path, "w") as fh:
                    json.dump(rows, fh)
    rows.sort(key=lambda r: (r["mollified"], r["t"]))
    for mollified in sorted({r["mollified"] for r in rows}):
        sub = [r for r in rows if r["mollified"] == mollified]
        frac = sum(r["certified"] for r in sub) / len(sub)
        n0 = sum(r["zeros_found"] for r in sub)
        rows.append({"t": "", "H": "", "certified": "", "zeros_found": "",
                     "mollified": mollified, "summary_fraction": frac,
                     "summary_N0": n0, "windows": len(sub)})
    write_report(rows, ["t", "H", "I_scaled", "J_scaled", "log_scale", "certified",
                        "zeros_found", "mollified", "summary_fraction", "summary_N0",
                        "windows"],
                 cfg, cfg.get("out"), cfg.get("format", "csv"), time.time() - t_start)
    if os.path.exists(ckpt_path):
        os.remove(ckpt_path)
    return 0


def _parse_form(text: str):
    parts = [p for p in text.replace(",", " ").split() if p]
    if len(parts) != 3:
        raise ConfigError("--form wants three integers a,b,c")
    return tuple(int(p) for p in parts)


def load_config_file(path: str) -> dict:
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#") or "=" not in line:
                continue
            k, v = (p.strip() for p in line.split("=", 1))
            out[k.replace("-", "_")] = v
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="critline",
                                description="Epstein zeta / Hecke L-function toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--config", help="config file with key = value lines")
        sp.add_argument("--disc", type=int)
        sp.add_argument("--form", type=str, help="a,b,c")
        sp.add_argument("--t-min", dest="t_min", type=float)
        sp.add_argument("--t-max", dest="t_max", type=float)
        sp.add_argument("--H", dest="H", type=float)
        sp.add_argument("--X", dest="X", type=float)
        sp.add_argument("--T", dest="T", type=float)
        sp.add_argument("--theta", type=float)
        sp.add_argument("--delta", type=float)
        sp.add_argument("--budget", type=float)
        sp.add_argument("--threads", type=int)
        sp.add_argument("--out", type=str)
        sp.add_argument("--format", choices=("csv", "json"), default=None)
        sp.add_argument("--resume", action="store_true")
        sp.add_argument("--step-scale", dest="step_scale", type=float)

    sz = sub.add_parser("zeros", help="scan critical-line zeros")
    common(sz)
    sv = sub.add_parser("verify", help="run a named verification suite")
    common(sv)
    sv.add_argument("--suite", type=str)
    sp_ = sub.add_parser("scan-proportion", help="window sign-change sweep")
    common(sp_)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    cfg = {}
    if args.config:
        try:
            raw = load_config_file(args.config)
        except OSError as e:
            print(f"config error: {e}", file=sys.stderr)
            return 2
        for k, v in raw.items():
            if k == "form":
                cfg["form"] = _parse_form(v)
            elif k in ("disc", "threads"):
                cfg[k] = int(v)
            elif k in ("suite", "out", "format"):
                cfg[k] = v
            elif k == "resume":
                cfg[k] = v.lower() in ("1", "true", "yes")
            else:
                cfg[k] = float(v)
    for k, v in vars(args).items():
        if k in ("command", "config") or v is None or v is False:
            continue
        cfg[k] = _parse_form(v) if k == "form" else v
    cfg.setdefault("format", "csv")
    try:
        if args.command == "zeros":
            return cmd_zeros(cfg)
        if args.command == "verify":
            return cmd_verify(cfg)
        if args.command == "scan-proportion":
            return cmd_scan_proportion(cfg)
        raise ConfigError(f"unknown command {args.command}")
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return 2
    except ArithmeticError as e:
        print(f"budget failure: {e}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
