"""Command-line front end.

Subcommands
-----------
car-check    relation residuals for generator tuples of 1..M modes
norm         operator norms of the named matrix targets over a size ladder
bennett      scalar series + matrix second-difference summability report
multiplier   witness lower bounds for structured Schur multiplier sections
similarity   Sylvester-series similarity residuals for a shift-coupled block
sweep        run a batch of the above from a JSON job file

Every command writes a CSV for its row family (norms.csv, bennett.csv,
similarity.csv, car.csv or multiplier.csv) into --out, plus a JSON mirror
of the same rows with parameters and extra diagnostics.  ``sweep`` writes
all five CSVs (header-only when a family received no rows) and a
sweep.json run summary.  Output is deterministic for fixed inputs: floats
are printed with repr-faithful %.17g, files are LF-terminated UTF-8, and
rows appear in a fixed order, so re-running a command reproduces the
files byte for byte.

Randomness (witness matrices, power-iteration starts, coupling corners)
is driven by one seed with precedence: --seed, then the FOGUEL_LAB_SEED
environment variable, then the built-in default 2002.  Sweep jobs run
with the global seed XOR the job id.

Exit codes: 0 success; 1 bad arguments or validation failure; 2 a norm
computation failed to converge (outputs are still written); 3 unexpected
internal error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

import numpy as np

from .car import build_car, car_check, car_hankel, car_hankel_oracles, car_pattern_matrix, commutator_pattern
from .errors import ValidationError
from .foguel import assemble_foguel, intertwiner_partial, similarity_check
from .hankel import (
    HankelSpec,
    derivation_product,
    derivative_weight,
    make_weighted_hankel,
    unit_weight,
)
from .linalg import (
    DENSE_SIZE_CAP,
    make_shift,
    matvec_oracles,
    op_norm_dense,
    op_norm_power,
)
from .schur import MultiplierSpec, bennett_criterion, multiplier_lower_bound
from .sequences import WeightSequence, bennett_sums, proof_chain_bound

DEFAULT_SEED = 2002
SEED_ENV_VAR = "FOGUEL_LAB_SEED"

ROW_FIELDS = {
    "norms": ("target", "N", "param", "method", "value", "iters", "converged"),
    "bennett": (
        "sequence",
        "epsilon",
        "terms",
        "sum_a",
        "sum_b",
        "sum_c",
        "second_diff_partial",
        "verdict",
    ),
    "similarity": (
        "N",
        "rho",
        "n_terms",
        "window",
        "residual_interior",
        "residual_full",
        "cond_L",
    ),
    "car": ("modes", "dev_anti", "dev_mixed"),
    "multiplier": ("kind", "epsilon", "N", "witnesses", "lower_bound", "seed"),
}

FAMILY_OF = {
    "car-check": "car",
    "norm": "norms",
    "bennett": "bennett",
    "multiplier": "multiplier",
    "similarity": "similarity",
}

NORM_TARGETS = (
    "shift",
    "hankel",
    "hankel-deriv",
    "derivation-commutator",
    "derivation-gamma-d",
    "derivation-dstar-gamma",
    "car-hankel",
    "car-hankel-deriv",
    "car-commutator",
)

BENNETT_SEQUENCES = ("harmonic", "constant", "log", "loglog")
MULTIPLIER_KINDS = ("difference-quotient", "log-damped", "loglog-damped")

ALPHA_HELP = (
    "pisier-flat | pisier-geometric | harmonic | constant | "
    "power:S | geometric:R | log:EPS | loglog:EPS"
)


# ---- parameter parsing -------------------------------------------------


def resolve_seed(explicit: int | None) -> int:
    if explicit is not None:
        return int(explicit)
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValidationError(
                f"{SEED_ENV_VAR} must be an integer, got {env!r}"
            ) from None
    return DEFAULT_SEED


def parse_alpha(text: str) -> WeightSequence:
    t = str(text).strip()
    if t == "pisier-flat":
        return WeightSequence.pisier_flat()
    if t == "pisier-geometric":
        return WeightSequence.pisier_geometric()
    if t == "harmonic":
        return WeightSequence.harmonic()
    if t == "constant":
        return WeightSequence.constant()
    head, sep, val = t.partition(":")
    if sep:
        try:
            x = float(val)
        except ValueError:
            raise ValidationError(
                f"bad numeric parameter in alpha spec {text!r}"
            ) from None
        if head == "power":
            return WeightSequence.power(x)
        if head == "geometric":
            return WeightSequence.geometric(x)
        if head == "log":
            return WeightSequence.log_family(x).shifted(1)
        if head == "loglog":
            return WeightSequence.loglog_family(x).shifted(1)
    raise ValidationError(f"unrecognized alpha spec {text!r}; expected {ALPHA_HELP}")


def parse_sizes(value) -> list[int]:
    if isinstance(value, str):
        parts = [p.strip() for p in value.split(",") if p.strip()]
        try:
            sizes = [int(p) for p in parts]
        except ValueError:
            raise ValidationError(f"sizes must be integers, got {value!r}") from None
    elif isinstance(value, (list, tuple)):
        sizes = []
        for p in value:
            if isinstance(p, bool) or not isinstance(p, int):
                raise ValidationError("sizes must be a list of integers")
            sizes.append(p)
    else:
        raise ValidationError("sizes must be a comma-separated string or a list")
    if not sizes:
        raise ValidationError("at least one size is required")
    if any(n < 1 for n in sizes):
        raise ValidationError("sizes must be >= 1")
    return sizes


def _need(params: dict, key: str):
    if key not in params or params[key] is None:
        raise ValidationError(f"missing required parameter {key!r}")
    return params[key]


def _as_int(value, key: str, lo: int | None = None) -> int:
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        try:
            value = int(str(value))
        except (TypeError, ValueError):
            raise ValidationError(f"{key} must be an integer") from None
    value = int(value)
    if lo is not None and value < lo:
        raise ValidationError(f"{key} must be >= {lo}")
    return value


def _as_float(value, key: str) -> float:
    try:
        return float(value)
    except (TypeError, ValueError):
        raise ValidationError(f"{key} must be a number") from None


def normalize_params(command: str, params: dict) -> dict:
    """Coerce a raw parameter mapping to its canonical, serializable form.

    Shared by the argparse path and sweep jobs so that both validate and
    execute identically.
    """
    if command not in FAMILY_OF:
        raise ValidationError(f"unknown command {command!r}")
    p = dict(params)
    if command == "car-check":
        return {"modes": _as_int(p.get("modes", 6), "modes", lo=1)}
    if command == "norm":
        target = _need(p, "target")
        if target not in NORM_TARGETS:
            raise ValidationError(f"unknown norm target {target!r}")
        alpha = p.get("alpha")
        if target != "shift":
            if alpha is None:
                raise ValidationError(f"target {target!r} requires --alpha")
            parse_alpha(alpha)  # validate eagerly for a prompt error
        method = p.get("method", "auto")
        if method not in ("auto", "dense", "power"):
            raise ValidationError(f"method must be auto, dense or power, not {method!r}")
        return {
            "target": target,
            "sizes": parse_sizes(_need(p, "sizes")),
            "alpha": None if target == "shift" else str(alpha),
            "method": method,
            "tol": _as_float(p.get("tol", 1e-10), "tol"),
            "max_iter": _as_int(p.get("max_iter", 1000), "max_iter", lo=1),
        }
    if command == "bennett":
        name = _need(p, "sequence")
        if name not in BENNETT_SEQUENCES:
            raise ValidationError(f"unknown bennett sequence {name!r}")
        eps = p.get("epsilon")
        if name in ("log", "loglog"):
            if eps is None:
                raise ValidationError(f"sequence {name!r} requires --epsilon")
            eps = _as_float(eps, "epsilon")
        elif eps is not None:
            raise ValidationError("epsilon only applies to the log/loglog sequences")
        return {
            "sequence": name,
            "epsilon": eps,
            "terms": _as_int(p.get("terms", 10000), "terms", lo=10),
        }
    if command == "multiplier":
        kind = _need(p, "kind")
        if kind not in MULTIPLIER_KINDS:
            raise ValidationError(f"unknown multiplier kind {kind!r}")
        eps = p.get("epsilon")
        if kind in ("log-damped", "loglog-damped"):
            if eps is None:
                raise ValidationError(f"kind {kind!r} requires --epsilon")
            eps = _as_float(eps, "epsilon")
        elif eps is not None:
            raise ValidationError("epsilon only applies to the damped kinds")
        return {
            "kind": kind,
            "epsilon": eps,
            "sizes": parse_sizes(p.get("sizes", "16,32,64")),
            "witnesses": _as_int(p.get("witnesses", 3), "witnesses", lo=1),
        }
    # similarity
    return {
        "size": _as_int(p.get("size", 64), "size", lo=2),
        "rho": _as_float(p.get("rho", 0.9), "rho"),
        "n_terms": _as_int(p.get("n_terms", 100), "n_terms", lo=1),
        "window": _as_int(p.get("window", 32), "window", lo=1),
        "corner": _as_int(p.get("corner", 16), "corner", lo=1),
    }


# ---- command handlers --------------------------------------------------


def _run_car_check(p: dict, seed: int):
    rows = []
    worst_anti = 0.0
    worst_mixed = 0.0
    for m in range(1, p["modes"] + 1):
        alg = build_car(m)
        dev_anti, dev_mixed = car_check(alg)
        rows.append(
            {"modes": m, "dev_anti": float(dev_anti), "dev_mixed": float(dev_mixed)}
        )
        worst_anti = max(worst_anti, dev_anti)
        worst_mixed = max(worst_mixed, dev_mixed)
    diag = {"max_dev_anti": float(worst_anti), "max_dev_mixed": float(worst_mixed)}
    return rows, diag, 0


def _norm_target_matrix(target: str, n: int, seq) -> np.ndarray:
    if target == "shift":
        return make_shift(n)
    if target in ("hankel", "hankel-deriv"):
        w = unit_weight if target == "hankel" else derivative_weight
        return make_weighted_hankel(HankelSpec(seq, n), w)
    if target.startswith("derivation-"):
        kind = target.removeprefix("derivation-").replace("-", "_")
        return derivation_product(HankelSpec(seq, n), kind)
    if target in ("car-hankel", "car-hankel-deriv"):
        w = None if target == "car-hankel" else derivative_weight
        return car_hankel(seq, w, n)
    # car-commutator
    beta, phi = commutator_pattern(seq)
    return car_pattern_matrix(beta, phi, n)


def _norm_estimate(
    target: str, n: int, seq, method: str, tol: float, max_iter: int, seed: int
):
    car_like = target in ("car-hankel", "car-hankel-deriv")
    if method == "auto" and car_like and n * 2 ** (2 * n - 1) > DENSE_SIZE_CAP:
        method = "power"
    if method == "power":
        if car_like:
            apply, apply_adjoint, dim = car_hankel_oracles(
                seq, None if target == "car-hankel" else derivative_weight, n
            )
        else:
            apply, apply_adjoint, dim = matvec_oracles(
                _norm_target_matrix(target, n, seq)
            )
        return op_norm_power(
            apply, apply_adjoint, dim, tol=tol, max_iter=max_iter, seed=seed
        )
    return op_norm_dense(_norm_target_matrix(target, n, seq))


def _run_norm(p: dict, seed: int):
    seq = parse_alpha(p["alpha"]) if p["alpha"] is not None else None
    param = seq.describe() if seq is not None else None
    rows = []
    code = 0
    for n in p["sizes"]:
        est = _norm_estimate(
            p["target"], n, seq, p["method"], p["tol"], p["max_iter"], seed
        )
        rows.append(
            {
                "target": p["target"],
                "N": int(n),
                "param": param,
                "method": est.method,
                "value": float(est.value),
                "iters": int(est.iterations),
                "converged": bool(est.converged),
            }
        )
        if not est.converged:
            code = 2
    diag = {"tol": p["tol"], "max_iter": p["max_iter"]}
    return rows, diag, code


def _bennett_sequence(name: str, eps: float | None) -> WeightSequence:
    if name == "harmonic":
        return WeightSequence.harmonic()
    if name == "constant":
        return WeightSequence.constant()
    if name == "log":
        return WeightSequence.log_family(eps).shifted(1)
    return WeightSequence.loglog_family(eps).shifted(1)


def _run_bennett(p: dict, seed: int):
    seq = _bennett_sequence(p["sequence"], p["epsilon"])
    rep = bennett_sums(seq, p["terms"])
    mrep = bennett_criterion(MultiplierSpec.from_sequence(seq), p["terms"])
    chain = proof_chain_bound(seq, p["terms"])
    all_ok = all(rep.verdicts) and mrep.verdict
    row = {
        "sequence": p["sequence"],
        "epsilon": p["epsilon"],
        "terms": int(p["terms"]),
        "sum_a": float(rep.sum_a_over_n),
        "sum_b": float(rep.sum_abs_diff1),
        "sum_c": float(rep.sum_weighted_diff2),
        "second_diff_partial": float(mrep.total),
        "verdict": "convergent-looking" if all_ok else "divergent-looking",
    }
    diag = {
        "series_start": int(rep.n_start),
        "series_decade_increments": [list(map(float, t)) for t in rep.decade_increments],
        "series_verdicts": [bool(v) for v in rep.verdicts],
        "matrix_decade_increments": list(map(float, mrep.decade_increments)),
        "matrix_verdict": bool(mrep.verdict),
        "row_tail": float(mrep.row_tail),
        "col_tail": float(mrep.col_tail),
        "chain_bound": float(chain),
        "chain_dominates": bool(mrep.total <= chain + 1e-12),
    }
    return [row], diag, 0


def _multiplier_spec(kind: str, eps: float | None) -> MultiplierSpec:
    if kind == "difference-quotient":
        return MultiplierSpec.difference_quotient()
    if kind == "log-damped":
        return MultiplierSpec.log_damped(eps)
    return MultiplierSpec.loglog_damped(eps)


def _run_multiplier(p: dict, seed: int):
    spec = _multiplier_spec(p["kind"], p["epsilon"])
    rows = []
    probes = {}
    for n in p["sizes"]:
        probe = multiplier_lower_bound(spec, n, witnesses=p["witnesses"], seed=seed)
        rows.append(
            {
                "kind": p["kind"],
                "epsilon": p["epsilon"],
                "N": int(n),
                "witnesses": int(p["witnesses"]),
                "lower_bound": float(probe.lower_bound),
                "seed": int(seed),
            }
        )
        probes[str(n)] = {
            "best_witness": probe.best_witness,
            "ratios": [[name, float(v)] for name, v in probe.ratios],
        }
    return rows, {"probes": probes}, 0


def _run_similarity(p: dict, seed: int):
    n, corner = p["size"], p["corner"]
    if corner > n:
        raise ValidationError("corner must not exceed size")
    t2 = make_shift(n)
    t1 = p["rho"] * make_shift(n)
    rng = np.random.default_rng(seed)
    block = rng.standard_normal((corner, corner)) + 1j * rng.standard_normal(
        (corner, corner)
    )
    block = block / op_norm_dense(block).value
    x = np.zeros((n, n), dtype=np.complex128)
    x[:corner, :corner] = block
    series = intertwiner_partial(t2, t1, x, p["n_terms"], stab_tol=1e-10)
    foguel = assemble_foguel(t2, t1, x)
    rep = similarity_check(foguel, series.z, p["window"])
    row = {
        "N": int(n),
        "rho": float(p["rho"]),
        "n_terms": int(p["n_terms"]),
        "window": int(p["window"]),
        "residual_interior": float(rep.residual_interior),
        "residual_full": float(rep.residual_full),
        "cond_L": float(rep.cond_l),
    }
    diag = {
        "conjugation_residual": float(rep.conjugation_residual),
        "stabilized_at": series.stabilized_at,
        "last_term_norm": float(series.term_norms[-1]),
        "intertwiner_norm": float(series.partial_norms[-1]),
        "corner": int(corner),
    }
    return [row], diag, 0


HANDLERS = {
    "car-check": _run_car_check,
    "norm": _run_norm,
    "bennett": _run_bennett,
    "multiplier": _run_multiplier,
    "similarity": _run_similarity,
}


# ---- output writers ----------------------------------------------------


def format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def write_family_csv(path: Path, family: str, rows: list[dict]) -> None:
    fields = ROW_FIELDS[family]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(fields)
        for row in rows:
            writer.writerow([format_cell(row[k]) for k in fields])


def write_json_mirror(
    path: Path, command: str, seed: int, params: dict, rows: list, diagnostics: dict
) -> None:
    doc = {
        "schema": 1,
        "command": command,
        "seed": seed,
        "params": params,
        "rows": rows,
        "diagnostics": diagnostics,
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2, sort_keys=True)
        fh.write("\n")


def run_command(command: str, params: dict, seed: int, out_dir: Path) -> int:
    canon = normalize_params(command, params)
    rows, diagnostics, code = HANDLERS[command](canon, seed)
    family = FAMILY_OF[command]
    out_dir.mkdir(parents=True, exist_ok=True)
    write_family_csv(out_dir / f"{family}.csv", family, rows)
    write_json_mirror(
        out_dir / f"{family}.json", command, seed, canon, rows, diagnostics
    )
    return code


# ---- sweep -------------------------------------------------------------


def load_sweep_spec(path: str) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except FileNotFoundError:
        raise ValidationError(f"sweep spec not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise ValidationError(f"sweep spec is not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or doc.get("schema") != 1:
        raise ValidationError('sweep spec must be a JSON object with "schema": 1')
    seed = doc.get("seed")
    if seed is not None and (isinstance(seed, bool) or not isinstance(seed, int)):
        raise ValidationError("sweep seed must be an integer")
    jobs = doc.get("jobs")
    if not isinstance(jobs, list):
        raise ValidationError('sweep spec needs a "jobs" array')
    seen = set()
    for job in jobs:
        if not isinstance(job, dict):
            raise ValidationError("each job must be a JSON object")
        jid = job.get("id")
        if isinstance(jid, bool) or not isinstance(jid, int) or jid < 0:
            raise ValidationError("job ids must be non-negative integers")
        if jid in seen:
            raise ValidationError(f"duplicate job id {jid}")
        seen.add(jid)
        if job.get("command") not in HANDLERS:
            raise ValidationError(f"unknown job command {job.get('command')!r}")
        if not isinstance(job.get("params", {}), dict):
            raise ValidationError("job params must be a JSON object")
    return doc


def run_sweep(spec_path: str, cli_seed: int | None, out_dir: Path) -> int:
    doc = load_sweep_spec(spec_path)
    explicit = cli_seed if cli_seed is not None else doc.get("seed")
    global_seed = resolve_seed(explicit)
    jobs = sorted(doc["jobs"], key=lambda j: j["id"])
    family_rows = {family: [] for family in ROW_FIELDS}
    summaries = []
    overall = 0
    for job in jobs:
        jid = job["id"]
        command = job["command"]
        job_seed = global_seed ^ jid
        entry = {"id": jid, "command": command, "seed": job_seed}
        try:
            canon = normalize_params(command, job.get("params", {}))
            rows, _, code = HANDLERS[command](canon, job_seed)
            family_rows[FAMILY_OF[command]].extend(rows)
            entry["family"] = FAMILY_OF[command]
            entry["rows"] = len(rows)
            entry["exit_code"] = code
        except ValidationError as exc:
            entry["error"] = str(exc)
            entry["rows"] = 0
            entry["exit_code"] = code = 1
        except Exception as exc:  # keep the batch going; surface at the end
            entry["error"] = f"{type(exc).__name__}: {exc}"
            entry["rows"] = 0
            entry["exit_code"] = code = 3
        overall = max(overall, code)
        summaries.append(entry)
    out_dir.mkdir(parents=True, exist_ok=True)
    for family in sorted(ROW_FIELDS):
        write_family_csv(out_dir / f"{family}.csv", family, family_rows[family])
    summary = {
        "schema": 1,
        "command": "sweep",
        "seed": global_seed,
        "params": {"spec": str(spec_path)},
        "jobs": summaries,
        "exit_code": overall,
    }
    with open(out_dir / "sweep.json", "w", encoding="utf-8") as fh:
        json.dump(summary, fh, indent=2, sort_keys=True)
        fh.write("\n")
    return overall


# ---- argparse plumbing -------------------------------------------------


def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--out", default=".", help="output directory (default: .)")
    sp.add_argument(
        "--seed",
        type=int,
        default=None,
        help=f"RNG seed (default: ${SEED_ENV_VAR} or {DEFAULT_SEED})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foguel-lab",
        description="Finite-section laboratory for shift/Hankel block operators, "
        "generator-valued matrices and Schur multiplier diagnostics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("car-check", help="anticommutation residual sweep")
    sp.add_argument("--modes", type=int, default=6, help="check 1..MODES generators")
    _add_common(sp)

    sp = sub.add_parser("norm", help="operator norms over a size ladder")
    sp.add_argument("--target", required=True, choices=NORM_TARGETS)
    sp.add_argument(
        "--sizes", "--N", dest="sizes", required=True,
        help="comma-separated section sizes",
    )
    sp.add_argument("--alpha", default=None, help=f"coefficients: {ALPHA_HELP}")
    sp.add_argument(
        "--method", choices=("auto", "dense", "power"), default="auto",
        help="norm route (auto: dense when within the size cap)",
    )
    sp.add_argument("--tol", type=float, default=1e-10, help="power-iteration tolerance")
    sp.add_argument("--max-iter", type=int, default=1000)
    _add_common(sp)

    sp = sub.add_parser("bennett", help="summability report for a coefficient series")
    sp.add_argument("--sequence", required=True, choices=BENNETT_SEQUENCES)
    sp.add_argument("--epsilon", type=float, default=None)
    sp.add_argument("--terms", type=int, default=10000)
    _add_common(sp)

    sp = sub.add_parser("multiplier", help="witness lower bounds for multiplier sections")
    sp.add_argument("--kind", required=True, choices=MULTIPLIER_KINDS)
    sp.add_argument("--epsilon", type=float, default=None)
    sp.add_argument("--sizes", default="16,32,64", help="comma-separated section sizes")
    sp.add_argument("--witnesses", type=int, default=3)
    _add_common(sp)

    sp = sub.add_parser("similarity", help="Sylvester-series similarity residuals")
    sp.add_argument("--size", type=int, default=64)
    sp.add_argument("--rho", type=float, default=0.9, help="contraction factor of T1")
    sp.add_argument("--n-terms", type=int, default=100)
    sp.add_argument("--window", type=int, default=32)
    sp.add_argument("--corner", type=int, default=16, help="support of the coupling X")
    _add_common(sp)

    sp = sub.add_parser("sweep", help="run a JSON-described batch of jobs")
    sp.add_argument("spec", help="path to the sweep JSON file")
    _add_common(sp)

    return parser


_PARAM_KEYS = {
    "car-check": ("modes",),
    "norm": ("target", "sizes", "alpha", "method", "tol", "max_iter"),
    "bennett": ("sequence", "epsilon", "terms"),
    "multiplier": ("kind", "epsilon", "sizes", "witnesses"),
    "similarity": ("size", "rho", "n_terms", "window", "corner"),
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    out_dir = Path(args.out)
    try:
        if args.command == "sweep":
            return run_sweep(args.spec, args.seed, out_dir)
        params = {k: getattr(args, k) for k in _PARAM_KEYS[args.command]}
        seed = resolve_seed(args.seed)
        return run_command(args.command, params, seed, out_dir)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # pragma: no cover - defensive
        print(f"unexpected error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
