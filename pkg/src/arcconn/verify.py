"""Exhaustive and sampled sweeps that machine-check the structure theorems.

Per graph, ``check_graph`` produces a flat :class:`VerificationRecord` whose
clause columns hold one of "pass", "fail", or "na":

* ``theorem1_ok``: the girth-cycle witness criterion for restricted-cut
  existence agrees with the outcome of the exact minimum search.
* ``bounds_ok``: on strong girth-4 graphs with n >= 6 and no exception-family
  match, a restricted cut exists and lambda <= lambda' <= xi.
* ``family_consistency_ok``: exception-family members admit no restricted cut.
* ``proof_ok``: some constructive cut candidate over some girth cycle is a
  valid restricted cut of size at most xi (same stratum as ``bounds_ok``).

``run_sweep`` drives the bitmask kernels over a code range (exhaustive) or a
seeded sample, fans the survivors through ``check_graph``, and aggregates
commutatively so chunk order, chunk size, and worker count never change the
result.  With an output directory it checkpoints per chunk (JSONL, resumable)
and writes records.csv, counterexamples.d6, summary.json, and, when the
definitional-reading audit is on, audit.json.
"""

from __future__ import annotations

import csv
import json
import multiprocessing
import os
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from . import _kernels
from .connectivity import (
    DefinitionReading,
    ORIGINAL_HOST,
    RESIDUAL_HOST,
    arc_connectivity,
    is_restricted_arc_cut,
    lambda_prime_exact,
    lambda_prime_existence_witness,
    proof_cut_constructions,
    xi,
)
from .cycles import girth, girth_cycles
from .digraph import Digraph
from .errors import CapExceeded
from .families import match_family
from .formats import emit_digraph6

SWEEP_CAP_ENV = "ARCCONN_SWEEP_CAP"
DEFAULT_SWEEP_CAP = 6

CLAUSE_FIELDS = ("theorem1_ok", "bounds_ok", "family_consistency_ok", "proof_ok")

RECORD_FIELDS = (
    "graph_id",
    "n",
    "m",
    "girth",
    "is_strong",
    "family",
    "family_params",
    "lambda",
    "lambda_prime_exists",
    "lambda_prime",
    "xi",
    "theorem1_ok",
    "bounds_ok",
    "family_consistency_ok",
    "proof_ok",
    "reading",
)

AUDIT_EXAMPLE_CAP = 20


def pair_count(n: int) -> int:
    return n * (n - 1) // 2


def universe_size(n: int) -> int:
    """Number of oriented graphs on n labelled vertices (3 per vertex pair)."""
    return 3 ** pair_count(n)


def exhaustive_cap() -> int:
    raw = os.environ.get(SWEEP_CAP_ENV)
    if raw is None:
        return DEFAULT_SWEEP_CAP
    try:
        return int(raw)
    except ValueError:
        raise CapExceeded(f"{SWEEP_CAP_ENV} must be an integer, got {raw!r}") from None


def enumerate_oriented(n: int, cap: Optional[int] = None) -> Iterator[Digraph]:
    """Yield every oriented graph on n labelled vertices in code order.

    Refuses orders above the exhaustive cap (default 6, override with the
    ARCCONN_SWEEP_CAP environment variable or the cap argument).
    """
    limit = exhaustive_cap() if cap is None else cap
    if n > limit:
        raise CapExceeded(
            f"exhaustive enumeration at n={n} exceeds the cap of {limit}; "
            f"raise {SWEEP_CAP_ENV} or pass a larger cap to opt in"
        )
    for code in range(universe_size(n)):
        yield Digraph.from_code(n, code)


def sample_codes(n: int, count: int, seed: int) -> list[int]:
    rng = random.Random(seed)
    size = universe_size(n)
    return [rng.randrange(size) for _ in range(count)]


def sample_oriented(n: int, count: int, seed: int) -> Iterator[Digraph]:
    """Yield count oriented graphs drawn uniformly with a fixed seed."""
    for code in sample_codes(n, count, seed):
        yield Digraph.from_code(n, code)


@dataclass(frozen=True)
class VerificationRecord:
    """One graph's measurements plus per-clause verdicts."""

    graph_id: str
    n: int
    m: int
    girth: Optional[int]
    is_strong: bool
    family: Optional[str]
    family_params: Optional[str]
    lambda_: Optional[int]
    lambda_prime_exists: Optional[bool]
    lambda_prime: Optional[int]
    xi: Optional[int]
    theorem1_ok: str
    bounds_ok: str
    family_consistency_ok: str
    proof_ok: str
    reading: str

    def clauses(self) -> dict[str, str]:
        return {name: getattr(self, name) for name in CLAUSE_FIELDS}

    @property
    def passed(self) -> bool:
        return all(v != "fail" for v in self.clauses().values())

    def to_row(self) -> list[str]:
        row = []
        for name in RECORD_FIELDS:
            attr = "lambda_" if name == "lambda" else name
            row.append(_cell(getattr(self, attr)))
        return row

    @classmethod
    def from_row(cls, row: list[str]) -> "VerificationRecord":
        if len(row) != len(RECORD_FIELDS):
            raise ValueError(f"expected {len(RECORD_FIELDS)} cells, got {len(row)}")
        g = dict(zip(RECORD_FIELDS, row))
        return cls(
            graph_id=g["graph_id"],
            n=int(g["n"]),
            m=int(g["m"]),
            girth=_opt_int(g["girth"]),
            is_strong=g["is_strong"] == "true",
            family=g["family"] or None,
            family_params=g["family_params"] or None,
            lambda_=_opt_int(g["lambda"]),
            lambda_prime_exists=None if g["lambda_prime_exists"] == "" else g["lambda_prime_exists"] == "true",
            lambda_prime=_opt_int(g["lambda_prime"]),
            xi=_opt_int(g["xi"]),
            theorem1_ok=g["theorem1_ok"],
            bounds_ok=g["bounds_ok"],
            family_consistency_ok=g["family_consistency_ok"],
            proof_ok=g["proof_ok"],
            reading=g["reading"],
        )


def _cell(value: object) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _opt_int(cell: str) -> Optional[int]:
    return None if cell == "" else int(cell)


def check_graph(
    D: Digraph,
    reading: DefinitionReading = ORIGINAL_HOST,
    check_proof: bool = False,
) -> VerificationRecord:
    """Measure one graph and judge every theorem clause that applies to it."""
    g = girth(D)
    strong = D.is_strong()
    match = match_family(D)
    family = match.family.value if match else None
    params = match.params.describe() if match else None

    lam = arc_connectivity(D) if strong and D.n >= 2 else None
    xi_val = xi(D).value if g is not None else None

    exists: Optional[bool] = None
    lp: Optional[int] = None
    theorem1 = "na"
    if strong and D.n >= 2:
        exists = lambda_prime_existence_witness(D) is not None
        cert = lambda_prime_exact(D, reading=reading)
        lp = cert.value if cert.found else None
        theorem1 = "pass" if exists == cert.found else "fail"

    consistency = "na"
    if family is not None:
        consistency = "pass" if exists is False else "fail"

    in_stratum = strong and g == 4 and D.n >= 6 and family is None
    bounds = "na"
    proof = "na"
    if in_stratum:
        if exists and lp is not None and lam is not None and xi_val is not None:
            bounds = "pass" if lam <= lp <= xi_val else "fail"
        else:
            bounds = "fail"
        if check_proof:
            proof = "pass" if _proof_clause(D, reading, xi_val) else "fail"

    return VerificationRecord(
        graph_id=emit_digraph6(D),
        n=D.n,
        m=D.m,
        girth=g,
        is_strong=strong,
        family=family,
        family_params=params,
        lambda_=lam,
        lambda_prime_exists=exists,
        lambda_prime=lp,
        xi=xi_val,
        theorem1_ok=theorem1,
        bounds_ok=bounds,
        family_consistency_ok=consistency,
        proof_ok=proof,
        reading=reading.value,
    )


def _proof_clause(D: Digraph, reading: DefinitionReading, xi_val: Optional[int]) -> bool:
    if xi_val is None:
        return False
    for C in girth_cycles(D):
        for S in proof_cut_constructions(D, C):
            if len(S) > xi_val:
                continue
            if is_restricted_arc_cut(D, S, reading=reading) is not None:
                return True
    return False


@dataclass(frozen=True)
class SweepSpec:
    """What to sweep: order range, stratum filters, mode, and toggles."""

    n_lo: int
    n_hi: int
    mode: str = "exhaustive"
    samples: int = 0
    seed: int = 0
    reading: DefinitionReading = ORIGINAL_HOST
    girth: Optional[int] = 4
    require_strong: bool = True
    audit_readings: bool = False
    check_proof_cuts: bool = False
    chunk_size: int = 250_000
    jobs: int = 1
    cap: Optional[int] = None

    def validate(self) -> None:
        if self.n_lo < 1 or self.n_lo > self.n_hi:
            raise ValueError(f"bad order range {self.n_lo}..{self.n_hi}")
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"mode must be exhaustive or random, got {self.mode!r}")
        if self.mode == "random" and self.samples < 1:
            raise ValueError("random mode needs samples >= 1")
        if self.girth is not None and self.girth < 2:
            raise ValueError("girth filter must be at least 2")
        if self.chunk_size < 1 or self.jobs < 1:
            raise ValueError("chunk_size and jobs must be positive")
        if self.mode == "exhaustive":
            limit = exhaustive_cap() if self.cap is None else self.cap
            if self.n_hi > limit:
                raise CapExceeded(
                    f"exhaustive sweep up to n={self.n_hi} exceeds the cap of "
                    f"{limit}; raise {SWEEP_CAP_ENV} or pass cap to opt in"
                )

    def fingerprint(self) -> dict[str, object]:
        """Spec fields that determine chunk identities and record content."""
        return {
            "n_lo": self.n_lo,
            "n_hi": self.n_hi,
            "mode": self.mode,
            "samples": self.samples if self.mode == "random" else 0,
            "seed": self.seed if self.mode == "random" else 0,
            "reading": self.reading.value,
            "girth": self.girth,
            "require_strong": self.require_strong,
            "audit_readings": self.audit_readings,
            "check_proof_cuts": self.check_proof_cuts,
            "chunk_size": self.chunk_size,
        }


def _new_audit() -> dict:
    return {
        "graphs": 0,
        "existence_differs": 0,
        "value_differs": 0,
        "clause_differs": {name: 0 for name in CLAUSE_FIELDS},
        "examples": {
            "existence": [],
            "value": [],
            "clauses": {name: [] for name in CLAUSE_FIELDS},
        },
    }


def _audit_pair(audit: dict, base: VerificationRecord, other: VerificationRecord) -> None:
    audit["graphs"] += 1
    if base.lambda_prime_exists != other.lambda_prime_exists:
        audit["existence_differs"] += 1
        audit["examples"]["existence"].append(base.graph_id)
    if base.lambda_prime != other.lambda_prime:
        audit["value_differs"] += 1
        audit["examples"]["value"].append(base.graph_id)
    for name in CLAUSE_FIELDS:
        if getattr(base, name) != getattr(other, name):
            audit["clause_differs"][name] += 1
            audit["examples"]["clauses"][name].append(base.graph_id)


def _merge_audit(total: dict, part: dict) -> None:
    total["graphs"] += part["graphs"]
    total["existence_differs"] += part["existence_differs"]
    total["value_differs"] += part["value_differs"]
    for name in CLAUSE_FIELDS:
        total["clause_differs"][name] += part["clause_differs"][name]
    total["examples"]["existence"] += part["examples"]["existence"]
    total["examples"]["value"] += part["examples"]["value"]
    for name in CLAUSE_FIELDS:
        total["examples"]["clauses"][name] += part["examples"]["clauses"][name]


def _trim_audit(audit: dict) -> None:
    ex = audit["examples"]
    ex["existence"] = sorted(ex["existence"])[:AUDIT_EXAMPLE_CAP]
    ex["value"] = sorted(ex["value"])[:AUDIT_EXAMPLE_CAP]
    for name in CLAUSE_FIELDS:
        ex["clauses"][name] = sorted(ex["clauses"][name])[:AUDIT_EXAMPLE_CAP]


def _other_reading(reading: DefinitionReading) -> DefinitionReading:
    return RESIDUAL_HOST if reading is ORIGINAL_HOST else ORIGINAL_HOST


Task = tuple[str, int, str, object]


def _plan_chunks(spec: SweepSpec) -> list[Task]:
    tasks: list[Task] = []
    for n in range(spec.n_lo, spec.n_hi + 1):
        if spec.mode == "exhaustive":
            size = universe_size(n)
            for lo in range(0, size, spec.chunk_size):
                hi = min(lo + spec.chunk_size, size)
                tasks.append((f"x:{n}:{lo}:{hi}", n, "range", (lo, hi)))
        else:
            codes = sample_codes(n, spec.samples, spec.seed + n)
            for i in range(0, len(codes), spec.chunk_size):
                part = codes[i : i + spec.chunk_size]
                tasks.append((f"r:{n}:{i}:{i + len(part)}", n, "codes", part))
    return tasks


def _run_chunk(args: tuple[SweepSpec, Task]) -> tuple[str, dict]:
    spec, (key, n, kind, payload) = args
    target = 0 if spec.girth is None else spec.girth
    if kind == "range":
        lo, hi = payload
        seen, strong, codes = _kernels.filter_range(
            n, lo, hi, girth_target=target, require_strong=spec.require_strong
        )
    else:
        seen, strong, codes = _kernels.filter_codes(
            n, payload, girth_target=target, require_strong=spec.require_strong
        )
    rows: list[list[str]] = []
    audit = _new_audit() if spec.audit_readings else None
    for code in codes:
        D = Digraph.from_code(n, code)
        rec = check_graph(D, reading=spec.reading, check_proof=spec.check_proof_cuts)
        rows.append(rec.to_row())
        if audit is not None:
            other = check_graph(
                D, reading=_other_reading(spec.reading), check_proof=spec.check_proof_cuts
            )
            _audit_pair(audit, rec, other)
    chunk = {"n": n, "seen": seen, "strong": strong, "rows": rows}
    if audit is not None:
        chunk["audit"] = audit
    return key, chunk


@dataclass
class SweepResult:
    """Aggregated sweep outcome plus the full record list."""

    spec: SweepSpec
    completed: bool
    seen: int = 0
    strong: int = 0
    stratum: int = 0
    per_n: dict[int, dict[str, int]] = field(default_factory=dict)
    family_counts: dict[str, int] = field(default_factory=dict)
    family_total: int = 0
    lambda_prime_connected: int = 0
    clause_tallies: dict[str, dict[str, int]] = field(default_factory=dict)
    records: list[VerificationRecord] = field(default_factory=list)
    counterexamples: list[VerificationRecord] = field(default_factory=list)
    audit: Optional[dict] = None
    accounting_ok: Optional[bool] = None
    runtime: float = 0.0
    backend: str = ""
    paths: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.completed and not self.counterexamples

    def summary(self) -> dict:
        return {
            "spec": self.spec.fingerprint(),
            "jobs": self.spec.jobs,
            "completed": self.completed,
            "seen": self.seen,
            "strong": self.strong,
            "stratum": self.stratum,
            "per_n": {str(n): dict(v) for n, v in sorted(self.per_n.items())},
            "family_counts": dict(sorted(self.family_counts.items())),
            "family_total": self.family_total,
            "lambda_prime_connected": self.lambda_prime_connected,
            "clause_tallies": {k: dict(v) for k, v in self.clause_tallies.items()},
            "counterexamples": len(self.counterexamples),
            "accounting_ok": self.accounting_ok,
            "ok": self.ok,
            "runtime_seconds": round(self.runtime, 3),
            "backend": self.backend,
        }


def _aggregate(spec: SweepSpec, chunks: dict[str, dict], completed: bool) -> SweepResult:
    result = SweepResult(spec=spec, completed=completed, backend=_kernels.backend_name())
    records: list[VerificationRecord] = []
    audit = _new_audit() if spec.audit_readings else None
    for chunk in chunks.values():
        n = chunk["n"]
        slot = result.per_n.setdefault(
            n, {"seen": 0, "strong": 0, "stratum": 0, "family": 0, "lambda_prime_connected": 0}
        )
        slot["seen"] += chunk["seen"]
        slot["strong"] += chunk["strong"]
        slot["stratum"] += len(chunk["rows"])
        records += [VerificationRecord.from_row(row) for row in chunk["rows"]]
        if audit is not None and "audit" in chunk:
            _merge_audit(audit, chunk["audit"])
    records.sort(key=lambda r: r.graph_id)
    result.records = records
    result.clause_tallies = {
        name: {"pass": 0, "fail": 0, "na": 0} for name in CLAUSE_FIELDS
    }
    for rec in records:
        if rec.family is not None:
            result.family_counts[rec.family] = result.family_counts.get(rec.family, 0) + 1
            result.per_n[rec.n]["family"] += 1
        if rec.lambda_prime_exists:
            result.per_n[rec.n]["lambda_prime_connected"] += 1
        for name, verdict in rec.clauses().items():
            result.clause_tallies[name][verdict] += 1
        if not rec.passed:
            result.counterexamples.append(rec)
    result.seen = sum(v["seen"] for v in result.per_n.values())
    result.strong = sum(v["strong"] for v in result.per_n.values())
    result.stratum = sum(v["stratum"] for v in result.per_n.values())
    result.family_total = sum(result.family_counts.values())
    result.lambda_prime_connected = sum(
        v["lambda_prime_connected"] for v in result.per_n.values()
    )
    if spec.girth == 4 and spec.require_strong:
        result.accounting_ok = (
            result.stratum == result.family_total + result.lambda_prime_connected
        )
    if audit is not None:
        _trim_audit(audit)
        result.audit = audit
    return result


def _read_checkpoint(path: str, spec: SweepSpec) -> dict[str, dict]:
    chunks: dict[str, dict] = {}
    header_ok = False
    with open(path, "r", encoding="ascii") as fh:
        for raw in fh:
            raw = raw.strip()
            if not raw:
                continue
            try:
                entry = json.loads(raw)
            except json.JSONDecodeError:
                continue  # torn tail line from an interrupted run
            if "spec" in entry:
                if entry["spec"] != spec.fingerprint():
                    raise ValueError(
                        "checkpoint was written by a different sweep configuration; "
                        "remove it or rerun without --resume"
                    )
                header_ok = True
                continue
            if header_ok:
                chunks[entry["key"]] = entry["chunk"]
    if not header_ok:
        raise ValueError("checkpoint is missing its configuration header")
    return chunks


def run_sweep(
    spec: SweepSpec,
    out_dir: Optional[str] = None,
    resume: bool = False,
    progress: Optional[Callable[[str], None]] = None,
    _stop_after_chunks: Optional[int] = None,
) -> SweepResult:
    """Run the sweep described by spec, optionally checkpointing to out_dir."""
    spec.validate()
    emit = progress or (lambda _msg: None)
    t0 = time.perf_counter()
    tasks = _plan_chunks(spec)
    chunks: dict[str, dict] = {}
    ck_path = None
    if out_dir is not None:
        os.makedirs(out_dir, exist_ok=True)
        ck_path = os.path.join(out_dir, "checkpoint.jsonl")
        if resume and os.path.exists(ck_path):
            chunks = _read_checkpoint(ck_path, spec)
            if chunks:
                emit(f"resumed {len(chunks)} completed chunk(s) from checkpoint")
        else:
            with open(ck_path, "w", encoding="ascii") as fh:
                fh.write(json.dumps({"spec": spec.fingerprint()}) + "\n")

    pending = [task for task in tasks if task[0] not in chunks]
    total = len(tasks)
    ck_handle = open(ck_path, "a", encoding="ascii") if ck_path else None
    fresh = 0
    try:
        def handle(key: str, chunk: dict) -> None:
            chunks[key] = chunk
            if ck_handle is not None:
                ck_handle.write(json.dumps({"key": key, "chunk": chunk}) + "\n")
                ck_handle.flush()
            for row in chunk["rows"]:
                rec = VerificationRecord.from_row(row)
                if not rec.passed:
                    bad = [c for c, v in rec.clauses().items() if v == "fail"]
                    emit(f"counterexample {rec.graph_id} fails {', '.join(bad)}")
            emit(
                f"chunk {len(chunks)}/{total} key={key} "
                f"stratum={len(chunk['rows'])} of {chunk['seen']} codes"
            )

        if spec.jobs > 1 and len(pending) > 1:
            ctx = multiprocessing.get_context("fork")
            with ctx.Pool(spec.jobs) as pool:
                args = [(spec, task) for task in pending]
                for key, chunk in pool.imap_unordered(_run_chunk, args):
                    handle(key, chunk)
                    fresh += 1
                    if _stop_after_chunks is not None and fresh >= _stop_after_chunks:
                        pool.terminate()
                        break
        else:
            for task in pending:
                key, chunk = _run_chunk((spec, task))
                handle(key, chunk)
                fresh += 1
                if _stop_after_chunks is not None and fresh >= _stop_after_chunks:
                    break
    finally:
        if ck_handle is not None:
            ck_handle.close()

    completed = len(chunks) == total
    result = _aggregate(spec, chunks, completed)
    result.runtime = time.perf_counter() - t0
    if out_dir is not None and completed:
        result.paths = _write_artifacts(result, out_dir)
    return result


def _write_artifacts(result: SweepResult, out_dir: str) -> dict[str, str]:
    paths: dict[str, str] = {}

    records_path = os.path.join(out_dir, "records.csv")
    _atomic_write(records_path, _render_csv(result.records))
    paths["records"] = records_path

    cex_path = os.path.join(out_dir, "counterexamples.d6")
    lines = [rec.graph_id for rec in result.counterexamples]
    _atomic_write(cex_path, "".join(line + "\n" for line in lines))
    paths["counterexamples"] = cex_path
    if result.counterexamples:
        cex_csv = os.path.join(out_dir, "counterexamples.csv")
        _atomic_write(cex_csv, _render_csv(result.counterexamples))
        paths["counterexamples_csv"] = cex_csv

    summary_path = os.path.join(out_dir, "summary.json")
    _atomic_write(summary_path, json.dumps(result.summary(), indent=2) + "\n")
    paths["summary"] = summary_path

    if result.audit is not None:
        audit_path = os.path.join(out_dir, "audit.json")
        payload = {
            "spec": result.spec.fingerprint(),
            "readings": [result.spec.reading.value, _other_reading(result.spec.reading).value],
            **result.audit,
        }
        _atomic_write(audit_path, json.dumps(payload, indent=2) + "\n")
        paths["audit"] = audit_path
    return paths


def _render_csv(records: list[VerificationRecord]) -> str:
    import io

    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RECORD_FIELDS)
    for rec in records:
        writer.writerow(rec.to_row())
    return buf.getvalue()


def _atomic_write(path: str, text: str) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="ascii") as fh:
        fh.write(text)
    os.replace(tmp, path)


def read_records_csv(path: str) -> list[VerificationRecord]:
    with open(path, "r", encoding="ascii", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != list(RECORD_FIELDS):
            raise ValueError(f"unexpected records.csv header: {header}")
        return [VerificationRecord.from_row(row) for row in reader]
