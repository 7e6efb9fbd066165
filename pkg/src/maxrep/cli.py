"""``maxrep`` command line: mss, krep, enum-starts, verify, bench.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import string
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

from .errors import MaxrepError
from .krepeat import (constrained_k_repeating, count_sigma_starts, enum_sigma_starts,
                      maximal_k_repeating, most_frequent_symbol)
from .oracle import check_maximal_k_rep, verify_mcs_output, witness_is_valid
from .seqcore import Seq
from .square import maximal_square_subsequence

SCHEMA = 1
CSV_HEADER = ["algo", "n", "k", "alphabet", "trial", "seed", "elapsed_ms", "output_len", "verified"]


class UsageError(Exception):
    pass


# ---- input and encoding -------------------------------------------------

def _byte_mode(args) -> bool:
    return bool(getattr(args, "bytes", False)) or os.environ.get("MAXREP_BYTE_MODE") == "1"


def _strip_newline(data):
    for nl in ("\r\n", "\n") if isinstance(data, str) else (b"\r\n", b"\n"):
        if data.endswith(nl):
            return data[:-len(nl)]
    return data


def read_input(args) -> Seq:
    """``--text`` beats ``--input`` beats standard input."""
    as_bytes = _byte_mode(args)
    if args.text is not None:
        data = args.text.encode() if as_bytes else _strip_newline(args.text)
    elif args.input is not None:
        try:
            with open(args.input, "rb") as fh:
                raw = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from exc
        data = raw if as_bytes else _strip_newline(_decode(raw, args.input))
    else:
        if as_bytes:
            data = sys.stdin.buffer.read()
        else:
            data = _strip_newline(sys.stdin.read())
    if getattr(args, "strict", False) and not data:
        raise UsageError("input is empty")
    return Seq(data)


def _decode(raw: bytes, name: str) -> str:
    try:
        return raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise UsageError(f"{name} is not valid UTF-8 (use --bytes)") from exc


def parse_pattern(value: Optional[str], as_bytes: bool) -> Seq:
    if value is None:
        return Seq()
    return Seq(value.encode() if as_bytes else value)


def parse_symbol(value: Optional[str], as_bytes: bool):
    if value is None:
        return None
    if as_bytes:
        if len(value) == 1:
            return ord(value)
        try:
            sym = int(value, 0)
        except ValueError as exc:
            raise UsageError(f"--sigma {value!r} is neither one character nor a byte value") from exc
        if not 0 <= sym <= 255:
            raise UsageError(f"--sigma {value!r} is not a byte value")
        return sym
    if len(value) != 1:
        raise UsageError(f"--sigma must be a single symbol, got {value!r}")
    return value


def encode_seq(seq: Seq, as_bytes: bool) -> str:
    return bytes(seq.symbols).hex() if as_bytes else "".join(seq.symbols)


def decode_seq(value: str, as_bytes: bool) -> Seq:
    return Seq(bytes.fromhex(value)) if as_bytes else Seq(value)


# ---- reports --------------------------------------------------------------

@dataclass
class RunReport:
    command: str
    mode: str
    input: str
    input_length: int
    k: int
    sigma: object
    result: str
    result_length: int
    unit: str
    witness: list
    verified: bool
    maximal: Optional[bool] = None
    counterexample: Optional[dict] = None
    elapsed_ms: float = 0.0
    seed: Optional[int] = None
    stats: dict = field(default_factory=dict)
    schema: int = SCHEMA

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def build_report(command: str, S: Seq, res, as_bytes: bool, elapsed_ms: float,
                 maximality: bool) -> RunReport:
    """``result`` is ZZ for mss and X for krep; ``witness`` always spells unit^k."""
    unit = res.unit
    result = unit * 2 if command == "mss" else unit
    valid = witness_is_valid(S, unit, res.k, res.witness)
    maximal = counterexample = None
    if maximality:
        verdict = res.verdict or check_maximal_k_rep(S, unit, res.k)
        maximal = verdict.is_maximal
        counterexample = verdict.as_dict()["counterexample"]
    stats = {}
    for key, val in res.stats.items():
        stats[key] = encode_seq(val, as_bytes) if isinstance(val, Seq) else val
    return RunReport(command=command, mode="bytes" if as_bytes else "text",
                     input=encode_seq(S, as_bytes), input_length=len(S), k=res.k,
                     sigma=res.sigma, result=encode_seq(result, as_bytes),
                     result_length=len(result), unit=encode_seq(unit, as_bytes),
                     witness=res.witness, verified=valid and maximal is not False,
                     maximal=maximal, counterexample=counterexample,
                     elapsed_ms=round(elapsed_ms, 3), stats=stats)


def emit(report: RunReport, as_json: bool):
    if as_json:
        print(report.to_json())
        return
    data = asdict(report)
    for key in ("command", "input_length", "k", "sigma", "result", "result_length",
                "verified", "maximal", "counterexample", "elapsed_ms"):
        value = data[key]
        if key == "result" and value == "":
            value = "ε"
        print(f"{key}: {value}")


# ---- subcommands -----------------------------------------------------------

def cmd_mss(args) -> int:
    S = read_input(args)
    as_bytes = _byte_mode(args)
    sigma = parse_symbol(args.sigma, as_bytes)
    t0 = time.perf_counter()
    res = maximal_square_subsequence(S, sigma=sigma)
    elapsed = (time.perf_counter() - t0) * 1000
    report = build_report("mss", S, res, as_bytes, elapsed, args.verify)
    emit(report, args.json)
    return 0 if report.verified else 1


def cmd_krep(args) -> int:
    if args.k < 1:
        raise UsageError(f"-k must be >= 1, got {args.k}")
    S = read_input(args)
    as_bytes = _byte_mode(args)
    sigma = parse_symbol(args.sigma, as_bytes)
    t0 = time.perf_counter()
    if args.constraint is not None:
        res = constrained_k_repeating(S, parse_pattern(args.constraint, as_bytes), args.k, sigma)
    else:
        res = maximal_k_repeating(S, args.k, sigma=sigma)
    elapsed = (time.perf_counter() - t0) * 1000
    report = build_report("krep", S, res, as_bytes, elapsed, args.verify)
    emit(report, args.json)
    return 0 if report.verified else 1


def cmd_enum(args) -> int:
    S = read_input(args)
    as_bytes = _byte_mode(args)
    sigma = parse_symbol(args.sigma, as_bytes)
    if sigma is None:
        sigma = most_frequent_symbol(S)
    positions = S.occ.positions.get(sigma, [])
    if args.k < 1 or args.r < 1:
        raise UsageError("-k and -r must be >= 1")
    if len(positions) < args.k * args.r:
        raise UsageError(f"{sigma!r} occurs {len(positions)} times, fewer than k*r = {args.k * args.r}")
    if args.count_only:
        count = sum(1 for _ in enum_sigma_starts(args.r, args.k, positions))
        R = len(positions) - args.k * args.r
        print(f"{count} = C({R + args.k},{args.k})")
        return 0 if count == count_sigma_starts(args.r, args.k, len(positions)) else 1
    for start in enum_sigma_starts(args.r, args.k, positions):
        print("(" + ",".join(map(str, start)) + ")")
    return 0


def _verify_krep(args) -> int:
    if args.report is not None:
        try:
            with open(args.report) as fh:
                data = json.load(fh)
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot load report {args.report}: {exc}") from exc
        as_bytes = data.get("mode") == "bytes"
        S = decode_seq(data["input"], as_bytes)
        unit = decode_seq(data["unit"], as_bytes)
        k = data["k"]
        witness = data.get("witness")
    else:
        if args.k is None:
            raise UsageError("verify krep needs -k (or --report)")
        k = args.k
        S = read_input(args)
        as_bytes = _byte_mode(args)
        if args.unit is not None:
            unit = parse_pattern(args.unit, as_bytes)
        elif args.candidate is not None:
            whole = parse_pattern(args.candidate, as_bytes).symbols
            if len(whole) % k:
                raise UsageError(f"candidate length {len(whole)} is not a multiple of k={k}")
            unit = Seq(whole[:len(whole) // k])
            if unit * k != Seq(whole):
                raise UsageError(f"candidate is not the {k}-fold repetition of one string")
        else:
            raise UsageError("verify krep needs --candidate, --unit or --report")
        witness = None
    out = {"schema": SCHEMA, "mode": "krep", "k": k, "unit": encode_seq(unit, as_bytes)}
    if witness is not None:
        out["witness_valid"] = witness_is_valid(S, unit, k, witness)
    try:
        verdict = check_maximal_k_rep(S, unit, k)
        out.update(verdict.as_dict())
    except MaxrepError:
        out.update({"is_valid": False, "is_maximal": False, "counterexample": None})
    print(json.dumps(out, sort_keys=True))
    ok = out["is_valid"] and out["is_maximal"] and out.get("witness_valid", True)
    return 0 if ok else 1


def _verify_mcs(args) -> int:
    as_bytes = _byte_mode(args)
    hosts = list(args.host or [])
    if args.hosts is not None:
        hosts.extend(args.hosts.split(","))
    if not hosts or args.candidate is None:
        raise UsageError("verify mcs needs --hosts/--host and --candidate")
    verdict = verify_mcs_output([parse_pattern(h, as_bytes) for h in hosts],
                                parse_pattern(args.constraint or "", as_bytes),
                                parse_pattern(args.candidate, as_bytes))
    out = {"schema": SCHEMA, "mode": "mcs", **verdict.as_dict(), "ok": verdict.ok}
    print(json.dumps(out, sort_keys=True))
    return 0 if verdict.ok else 1


def cmd_verify(args) -> int:
    if args.mcs or args.what == "mcs":
        return _verify_mcs(args)
    if args.what != "krep":
        raise UsageError("verify needs a mode: krep or mcs")
    return _verify_krep(args)


def _int_list(value: str) -> list[int]:
    try:
        return [int(v) for v in value.split(",") if v.strip()]
    except ValueError as exc:
        raise UsageError(f"not a comma-separated integer list: {value!r}") from exc


def random_text(n: int, alphabet: int, seed: int, trial: int) -> str:
    import numpy as np

    rng = np.random.default_rng([seed, n, trial])
    letters = string.ascii_lowercase[:alphabet]
    return "".join(letters[i] for i in rng.integers(0, alphabet, size=n))


def bench_cell(cell):
    """Time one (size, trial) cell; verification runs outside the timed region."""
    n, alphabet, trial, seed, ks = cell
    S = Seq(random_text(n, alphabet, seed, trial))
    rows = []
    jobs = [("mss", 2)] + [("krep", k) for k in ks]
    for algo, k in jobs:
        t0 = time.perf_counter()
        res = maximal_square_subsequence(S) if algo == "mss" else maximal_k_repeating(S, k)
        elapsed = (time.perf_counter() - t0) * 1000
        ok = witness_is_valid(S, res.unit, k, res.witness) and \
            check_maximal_k_rep(S, res.unit, k).is_maximal
        out_len = len(res.unit) * (2 if algo == "mss" else 1)
        rows.append([algo, n, k, alphabet, trial, seed, f"{elapsed:.3f}", out_len,
                     "true" if ok else "false"])
    return rows


def cmd_bench(args) -> int:
    sizes = _int_list(args.sizes)
    ks = _int_list(args.k)
    if not sizes or any(s <= 0 for s in sizes):
        raise UsageError("--sizes must list positive integers")
    if not 1 <= args.alphabet <= 26:
        raise UsageError("--alphabet must be in 1..26")
    if args.trials < 1 or any(k < 1 for k in ks):
        raise UsageError("--trials and -k values must be >= 1")
    cells = [(n, args.alphabet, t, args.seed, ks) for n in sizes for t in range(args.trials)]
    try:
        fh = open(args.csv, "w", newline="", encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot write {args.csv}: {exc.strerror}") from exc
    with fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                results = list(pool.map(bench_cell, cells))
        else:
            results = [bench_cell(c) for c in cells]
        failed = 0
        by_algo: dict = {}
        for rows in results:
            for row in rows:
                writer.writerow(row)
                failed += row[-1] != "true"
                by_algo.setdefault((row[0], row[2]), []).append(row)
    for (algo, k), rows in by_algo.items():
        print(f"{algo} k={k}: {len(rows)} rows", file=sys.stderr)
    return 1 if failed else 0


# ---- parser ------------------------------------------------------------------

def _add_input(p: argparse.ArgumentParser):
    p.add_argument("--text", help="input string literal")
    p.add_argument("--input", metavar="FILE", help="read the input string from FILE")
    p.add_argument("--bytes", action="store_true", help="treat input as raw bytes")
    p.add_argument("--strict", action="store_true", help="reject empty input")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="maxrep",
                                     description="Maximal square and k-repeating subsequences")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mss", help="maximal square subsequence")
    _add_input(p)
    p.add_argument("--sigma", help="seed symbol (default: smallest repeated symbol)")
    p.add_argument("--verify", action="store_true", help="also check maximality")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_mss)

    p = sub.add_parser("krep", help="maximal k-repeating subsequence")
    _add_input(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--constraint", help="seed the result must contain")
    p.add_argument("--sigma", help="pivot symbol")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_krep)

    p = sub.add_parser("enum-starts", help="stream sigma-starts")
    _add_input(p)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--sigma")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("verify", help="check a candidate with the brute-force oracles")
    p.add_argument("what", nargs="?", choices=["krep", "mcs"], default="krep")
    _add_input(p)
    p.add_argument("--mcs", action="store_true", help="same as the mcs mode")
    p.add_argument("-k", type=int)
    p.add_argument("--candidate", help="krep: the full repetition X^k; mcs: the candidate")
    p.add_argument("--unit", help="krep: the repeated string X itself")
    p.add_argument("--report", metavar="JSON", help="krep: re-verify a saved --json report")
    p.add_argument("--hosts", help="mcs: comma-separated host strings")
    p.add_argument("--host", action="append", help="mcs: one host (repeatable)")
    p.add_argument("--constraint", default="")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time mss/krep on seeded random strings")
    p.add_argument("--sizes", required=True)
    p.add_argument("--alphabet", type=int, default=4)
    p.add_argument("--trials", type=int, default=3)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-k", default="3", help="comma-separated k values for krep")
    p.add_argument("--csv", required=True)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, MaxrepError) as exc:
        print(f"maxrep {args.command}: {exc}", file=sys.stderr)
        return 2
