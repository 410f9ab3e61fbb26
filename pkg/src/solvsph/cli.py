"""Command-line entry point: ``solvsph <subcommand> ...``."""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
from dataclasses import dataclass
from importlib import resources

from . import __version__
from .data import DatumError, datum_from_dict, datum_to_dict, validate
from .enumerate import DEFAULT_ORBIT_BOUND, classify, rank_cap_from_env
from .marked import derive_admissible_pairs, table1_pairs
from .reconstruct import ReconstructionError, build_model, c_table
from .rootsys import RootSystemError, build_root_system
from .sphericity import DEFAULT_SEED, DEFAULT_TRIALS, criterion, oracle_dimension

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


@dataclass
class Config:
    rank_cap: int = 4
    oracle_trials: int = DEFAULT_TRIALS
    seed: int = DEFAULT_SEED
    orbit_bound: int = DEFAULT_ORBIT_BOUND
    output_format: str = "json"

    def __post_init__(self):
        for name in ("rank_cap", "oracle_trials", "orbit_bound"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be positive")


class UsageError(Exception):
    pass


def snapshot_hash() -> str:
    h = hashlib.sha256()
    tables = resources.files("solvsph") / "tables"
    for entry in sorted(tables.iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".json"):
            h.update(entry.name.encode())
            h.update(entry.read_bytes())
    return h.hexdigest()[:16]


def _load_datum(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    try:
        return datum_from_dict(obj)
    except (DatumError, RootSystemError) as exc:
        raise UsageError(f"{path}: {exc}") from exc


def _fmt_vec(v):
    return "[" + ", ".join(str(x) for x in v) + "]"


def cmd_validate(args, cfg, out):
    d = _load_datum(args.file)
    rep = validate(d)
    print(d.describe(), file=out)
    for line in rep.lines():
        print(line, file=out)
    print("valid" if rep.valid else "invalid", file=out)
    return EXIT_OK if rep.valid else EXIT_INVALID


def _model_or_report(d, out):
    rep = validate(d)
    if not rep.valid:
        for line in rep.lines():
            print(line, file=out)
        print("invalid", file=out)
        return None
    try:
        return build_model(d)
    except ReconstructionError as exc:
        print(f"reconstruction failed: {exc}", file=out)
        return None


def cmd_reconstruct(args, cfg, out):
    d = _load_datum(args.file)
    m = _model_or_report(d, out)
    if m is None:
        return EXIT_INVALID
    rs = d.rs
    psi = sorted(m.psi, key=lambda p: rs.index(p.root))
    print("Psi: " + ", ".join(p.describe(rs) for p in psi), file=out)
    print(f"dim n = {m.n_basis.dim}", file=out)
    print(f"dim s = {m.s_basis.dim}", file=out)
    labels = [rs.root_str(m.alg.basis_root(k)) for k in range(m.alg.npos)]
    print("n basis (coordinates over e_" + ", e_".join(labels) + "):", file=out)
    for row in m.n_basis.rows:
        print("  " + _fmt_vec(row[:m.alg.npos]), file=out)
    return EXIT_OK


def cmd_check(args, cfg, out):
    d = _load_datum(args.file)
    m = _model_or_report(d, out)
    if m is None:
        return EXIT_INVALID
    rs = d.rs
    verdict = criterion(m)
    print("c_lambda table:", file=out)
    for cls, c in c_table(m):
        print(f"  {c}  {{{', '.join(rs.root_str(r) for r in cls)}}}", file=out)
    print(f"criterion: {'spherical' if verdict else 'not spherical'}", file=out)
    ok = verdict
    if args.oracle:
        dim = oracle_dimension(m, cfg.oracle_trials, cfg.seed)
        spherical = dim == m.alg.dim
        print(f"oracle: {'spherical' if spherical else 'not spherical'} "
              f"(max dim(b + Ad(g)h) = {dim} of {m.alg.dim}, trials={cfg.oracle_trials}, "
              f"seed={cfg.seed})", file=out)
        ok = ok and spherical
        if spherical != verdict:
            print("WARNING: criterion and oracle disagree", file=out)
    return EXIT_OK if ok else EXIT_INVALID


def _tsv(entries):
    lines = ["orbit\tcanonical\tisolated\ts_rank\tM\tpi\tsim"]
    for e in entries:
        d = e.datum
        obj = datum_to_dict(d)
        lines.append("\t".join([
            str(e.orbit_id), str(int(e.canonical)), str(int(e.isolated)), str(d.torus.s_rank),
            ";".join(d.rs.root_str(r) for r in d.M) or "-",
            ";".join(str(p) for p in obj["pi"]) or "-",
            ";".join(",".join(str(i) for i in b) for b in obj["sim"]) or "-",
        ]))
    return "\n".join(lines) + "\n"


def classification_json(rs, up_to, entries) -> str:
    obj = {
        "system": rs.label,
        "up_to": up_to,
        "data": len(entries),
        "classes": len({e.orbit_id for e in entries}),
        "entries": [{"orbit": e.orbit_id, "canonical": e.canonical, "isolated": e.isolated,
                     "datum": datum_to_dict(e.datum)} for e in entries],
    }
    return json.dumps(obj, indent=1, sort_keys=True) + "\n"


def cmd_classify(args, cfg, out):
    try:
        rs = build_root_system(args.system)
    except RootSystemError as exc:
        raise UsageError(str(exc)) from exc
    if rs.rank > cfg.rank_cap:
        raise UsageError(f"{rs.label} exceeds the rank cap {cfg.rank_cap}")
    entries = classify(rs, args.up_to, cfg.rank_cap, args.jobs, cfg.orbit_bound)
    if cfg.output_format == "tsv":
        out.write(_tsv(entries))
    else:
        out.write(classification_json(rs, args.up_to, entries))
    return EXIT_OK


def cmd_marked_roots(args, cfg, out):
    try:
        rs = build_root_system(args.type)
    except RootSystemError as exc:
        raise UsageError(str(exc)) from exc
    try:
        derived = derive_admissible_pairs(rs, cfg.rank_cap)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    table = table1_pairs(rs)

    def show(pairs):
        return sorted(pairs, key=lambda p: (rs.index(p.root), p.pi))

    print(f"table ({len(table)} pairs):", file=out)
    for p in show(table):
        print("  " + p.describe(rs), file=out)
    print(f"derived ({len(derived)} pairs):", file=out)
    for p in show(derived):
        print("  " + p.describe(rs), file=out)
    only_t, only_d = show(table - derived), show(derived - table)
    print("diff: " + ("empty" if not (only_t or only_d) else ""), file=out)
    for p in only_t:
        print("  - " + p.describe(rs), file=out)
    for p in only_d:
        print("  + " + p.describe(rs), file=out)
    return EXIT_OK if not (only_t or only_d) else EXIT_INVALID


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank-cap", type=int, default=None)
    common.add_argument("--orbit-bound", type=int, default=DEFAULT_ORBIT_BOUND)

    p = _Parser(prog="solvsph", description="Connected solvable spherical subgroups: "
                "validation, reconstruction, sphericity checks and classification.")
    p.add_argument("--version", action="store_true", help="print version and table hash")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("validate", parents=[common], help="check conditions (A)-(T)")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("reconstruct", parents=[common], help="print Psi and n")
    s.add_argument("file")
    s.set_defaults(func=cmd_reconstruct)

    s = sub.add_parser("check", parents=[common], help="sphericity criterion (and oracle)")
    s.add_argument("file")
    s.add_argument("--oracle", action="store_true")
    s.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("classify", parents=[common], help="enumerate all data")
    s.add_argument("--system", required=True)
    s.add_argument("--up-to", choices=["torus-conjugacy", "g-conjugacy"], default="g-conjugacy")
    s.add_argument("--format", choices=["json", "tsv"], default="json")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("marked-roots", parents=[common], help="table vs derived marked pairs")
    s.add_argument("type")
    s.set_defaults(func=cmd_marked_roots)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = make_parser().parse_args(argv)
        if args.version:
            print(f"solvsph {__version__} tables {snapshot_hash()}", file=out)
            return EXIT_OK
        if args.command is None:
            raise UsageError("a subcommand is required")
        cfg = Config(
            rank_cap=args.rank_cap if args.rank_cap is not None else rank_cap_from_env(),
            oracle_trials=getattr(args, "trials", DEFAULT_TRIALS),
            seed=getattr(args, "seed", DEFAULT_SEED),
            orbit_bound=args.orbit_bound,
            output_format=getattr(args, "format", "json"),
        )
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be positive")
        return args.func(args, cfg, out)
    except (UsageError, ValueError) as exc:
        print(f"solvsph: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(run())
