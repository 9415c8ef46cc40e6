"""Block verdicts, the end-to-end pipeline and corpus scanning."""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from math import factorial
from pathlib import Path

from . import chartab, symfunc
from .blocks import (Block, BlockSystem, block_partition, brauer_bound_check,
                     k_of_defect_group, with_defect_groups)
from .dade import brauer_correspondent, dade_k
from .errors import DefectScopeError, Mismatch, StageError, ValidationError
from .perm import PermGroup, is_p_nilpotent, nu
from .presets import load_group, spec_label, symmetric_degree

log = logging.getLogger(__name__)

# symmetric groups above this order get their defect groups and inertial
# indices from S_n combinatorics instead of centralizers in the enumerated group
LOCAL_LIMIT = 50_000


class Verdict(str, Enum):
    STRONGLY_KD = "StronglyKD"
    KD = "KD"
    EXOTIC = "Exotic"


@dataclass(frozen=True)
class BlockClassification:
    verdict: Verdict
    kB: int
    kD: int
    p: int
    cyclic_defect: bool = False
    e: int | None = None


def classify_block(kB: int, kD: int, p: int, cyclic_defect: bool = False,
                   e: int | None = None) -> BlockClassification:
    if kB < 1 or kD < 1:
        raise ValueError("k(B) and k(D) must be positive")
    if kB == kD:
        v = Verdict.STRONGLY_KD
    elif (kB - kD) % p == 0:
        v = Verdict.KD
    else:
        v = Verdict.EXOTIC
    return BlockClassification(v, kB, kD, p, cyclic_defect, e)


# --- defect group shapes --------------------------------------------------------

def is_elementary_abelian(D: PermGroup, p: int) -> bool:
    return D.is_abelian() and all(o in (1, p) for o in D.element_orders().values())


def is_dihedral(D: PermGroup) -> bool:
    """Dihedral of order 2n >= 4 (the Klein four group counts as order 4)."""
    N = D.order
    if N < 4 or N % 2:
        return False
    n = N // 2
    orders = D.element_orders()
    if n == 2:
        return D.is_abelian() and not D.is_cyclic() and all(o in (1, 2) for o in orders.values())
    rot = next((x for x in D.elements() if orders[x] == n), None)
    if rot is None:
        return False
    powers = {rot ** i for i in range(n)}
    rinv = rot.inverse()
    return any(x not in powers and orders[x] == 2 and x * rot * x == rinv for x in D.elements())


def defect_group_record(D: PermGroup, p: int) -> dict:
    return {
        "order": D.order,
        "k_D": k_of_defect_group(D),
        "abelian": D.is_abelian(),
        "cyclic": D.is_cyclic(),
        "dihedral": is_dihedral(D),
        "elementary_abelian": is_elementary_abelian(D, p),
    }


# --- reports -----------------------------------------------------------------------

@dataclass
class GroupReport:
    group: str
    p: int
    order: int
    k_G: int
    method: str
    blocks: list
    p_nilpotent: bool | None = None
    p_group: bool = False
    local_method: str = "centralizer"

    @property
    def exotic(self) -> bool:
        return any(b["verdict"] == Verdict.EXOTIC.value for b in self.blocks)

    def counts(self) -> dict:
        out = {v.value: 0 for v in Verdict}
        for b in self.blocks:
            out[b["verdict"]] += 1
        return out

    def to_json(self) -> dict:
        return {
            "group": self.group,
            "p": self.p,
            "order": self.order,
            "k_G": self.k_G,
            "method": self.method,
            "local_method": self.local_method,
            "p_nilpotent": self.p_nilpotent,
            "p_group": self.p_group,
            "exotic": self.exotic,
            "counts": self.counts(),
            "blocks": self.blocks,
        }


def _stage(name, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except DefectScopeError as exc:
        if isinstance(exc, StageError):
            raise
        raise StageError(name, exc) from exc
    except (ValueError, KeyError, OSError) as exc:
        raise StageError(name, exc) from exc


def resolve_method(spec, method: str = "auto", table_path=None) -> str:
    if table_path is not None and method in ("auto", "ingest"):
        return "ingest"
    if method != "auto":
        return method
    n = symmetric_degree(spec) if isinstance(spec, str) else None
    return "mn" if n is not None and n >= 7 else "dixon"


def _weight_from_defect(n: int, p: int, d: int) -> int:
    for w in range(n // p + 1):
        if nu(factorial(w * p), p) == d:
            return w
    raise ValueError(f"no weight of S_{n} gives defect {d} at p={p}")


def _sn_provider(n: int):
    def provider(system: BlockSystem, block: Block) -> PermGroup:
        w = _weight_from_defect(n, system.p, block.defect)
        return symfunc.sn_block_defect_group(n, system.p, w)
    return provider


def build_table(spec, method: str, table_path=None):
    """(group, table, structural) for a spec; ``structural`` means S_n local data from combinatorics."""
    G = _stage("group", load_group, spec)
    n = symmetric_degree(spec) if isinstance(spec, str) else None
    structural = n is not None and factorial(n) > LOCAL_LIMIT
    if method == "dixon":
        T = _stage("chartab", chartab.dixon_schneider, G)
    elif method == "mn":
        if n is None:
            raise StageError("chartab", ValueError("method 'mn' needs a sym(n) group"))
        T = _stage("chartab", chartab.mn_table, n)
    elif method == "ingest":
        T = _stage("chartab", chartab.ingest, table_path)
    else:
        raise StageError("chartab", ValueError(f"unknown method {method!r}"))
    if not structural and method != "dixon":
        T = _stage("chartab", chartab.attach_group, T, G)
    return G, T, structural


def analyze(spec, p: int, method: str = "auto", table_path=None, *,
            cross_check: bool = True, _built=None) -> GroupReport:
    """Character table, blocks, defect groups and verdicts for one (G, p)."""
    method = resolve_method(spec, method, table_path)
    G, T, structural = _built or build_table(spec, method, table_path)
    n = symmetric_degree(spec) if isinstance(spec, str) else None
    S = _stage("blocks", block_partition, T, p)
    if structural:
        S = _stage("defect_groups", with_defect_groups, S, provider=_sn_provider(n))
    else:
        S = _stage("defect_groups", with_defect_groups, S, G)
    records = []
    for idx, b in enumerate(S.blocks):
        D = b.defect_group
        drec = _stage("defect_groups", defect_group_record, D, p)
        e = None
        dk = None
        if b.defect > 0 and drec["cyclic"]:
            if structural:
                N_ord, H_ord = symfunc.sn_cyclic_local_orders(n, p)
                e = N_ord // H_ord
            else:
                e = _stage("dade", brauer_correspondent, G, S, b, D, cross_check=cross_check).e
            dk = dade_k(p, b.defect, e).predicted_k
            if dk != b.kB:
                raise StageError("dade", Mismatch(
                    f"block {idx}: k(B) = {b.kB} but e + (p^d - 1)/e = {dk} (p={p}, d={b.defect}, e={e})"))
        if not brauer_bound_check(b, p):
            raise StageError("blocks", ValidationError("brauer_bound", (idx,), f"k(B) = {b.kB}, d = {b.defect}"))
        cl = classify_block(b.kB, drec["k_D"], p, drec["cyclic"], e)
        records.append({
            "index": idx,
            "principal": b.is_principal(),
            "characters": list(b.characters),
            "degrees": list(b.degrees),
            "d": b.defect,
            "kB": b.kB,
            "k0B": b.k0B,
            "heights": list(b.heights),
            "defect_class": b.defect_class,
            "defect_group": drec,
            "verdict": cl.verdict.value,
            "e": e,
            "dade_k": dk,
            "dade_ok": None if dk is None else dk == b.kB,
            "brauer_bound": brauer_bound_check(b, p),
        })
    order = T.order
    pnil = None if structural else is_p_nilpotent(G, p)
    return GroupReport(
        group=spec_label(spec), p=p, order=order, k_G=T.k, method=method, blocks=records,
        p_nilpotent=pnil, p_group=(order > 1 and order == p ** nu(order, p)),
        local_method="combinatorial" if structural else "centralizer",
    )


# --- general cases and empirical claims ---------------------------------------------

@dataclass
class CheckResult:
    name: str
    claim: str
    severity: str  # "bug": violation means a pipeline error; "finding": surfaced, not asserted
    checked: int = 0
    violations: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"name": self.name, "claim": self.claim, "severity": self.severity,
                "checked": self.checked, "violations": self.violations}


def verify_general_cases(reports) -> dict:
    """Run the structural checks over finished report dicts."""
    checks = {
        "defect_zero": CheckResult("defect_zero", "defect-zero blocks have k(B) = k(D) = 1", "bug"),
        "p_nilpotent": CheckResult("p_nilpotent", "principal block of a p-nilpotent group is strongly k(D)", "bug"),
        "p_group": CheckResult("p_group", "a p-group has one block and it is strongly k(D)", "bug"),
        "dihedral": CheckResult("dihedral", "dihedral defect group gives k(B) = k(D)", "finding"),
        "abelian_p23": CheckResult("abelian_p23", "abelian defect group at p in {2,3} gives a k(D)-block", "finding"),
        "elem_abelian_16": CheckResult("elem_abelian_16", "elementary abelian defect group of order 16 gives a k(D)-block", "finding"),
        "height_zero": CheckResult("height_zero", "abelian defect group gives k0(B) = k(B)", "finding"),
        "brauer_bound": CheckResult("brauer_bound", "k(B) <= p^(2d-2) for d >= 3, k(B) <= p^d otherwise", "bug"),
        "dade": CheckResult("dade", "cyclic defect group gives k(B) = e + (p^d - 1)/e", "bug"),
        "principal_sylow": CheckResult("principal_sylow", "principal block defect group has Sylow order", "bug"),
    }

    def hit(name, rep, blk=None, **extra):
        rec = {"group": rep["group"], "p": rep["p"]}
        if blk is not None:
            rec.update(block=blk["index"], kB=blk["kB"], kD=blk["defect_group"]["k_D"], d=blk["d"])
        rec.update(extra)
        checks[name].violations.append(rec)

    for rep in reports:
        p = rep["p"]
        blocks = rep["blocks"]
        if rep.get("p_group"):
            checks["p_group"].checked += 1
            if len(blocks) != 1 or blocks[0]["verdict"] != Verdict.STRONGLY_KD.value:
                hit("p_group", rep, nblocks=len(blocks))
        if rep.get("p_nilpotent"):
            checks["p_nilpotent"].checked += 1
            if blocks[0]["verdict"] != Verdict.STRONGLY_KD.value:
                hit("p_nilpotent", rep, blocks[0])
        full = p ** nu(rep["order"], p)
        for b in blocks:
            dg = b["defect_group"]
            ok_kd = b["verdict"] in (Verdict.STRONGLY_KD.value, Verdict.KD.value)
            if b["d"] == 0:
                checks["defect_zero"].checked += 1
                if not (b["kB"] == 1 and dg["k_D"] == 1):
                    hit("defect_zero", rep, b)
            if dg["dihedral"]:
                checks["dihedral"].checked += 1
                if b["kB"] != dg["k_D"]:
                    hit("dihedral", rep, b, order=dg["order"])
            if dg["abelian"] and p in (2, 3):
                checks["abelian_p23"].checked += 1
                if not ok_kd:
                    hit("abelian_p23", rep, b)
            if dg["elementary_abelian"] and dg["order"] == 16:
                checks["elem_abelian_16"].checked += 1
                if not ok_kd:
                    hit("elem_abelian_16", rep, b)
            if dg["abelian"]:
                checks["height_zero"].checked += 1
                if b["k0B"] != b["kB"]:
                    hit("height_zero", rep, b)
            checks["brauer_bound"].checked += 1
            if not b["brauer_bound"]:
                hit("brauer_bound", rep, b)
            if b["dade_k"] is not None:
                checks["dade"].checked += 1
                if not b["dade_ok"]:
                    hit("dade", rep, b, e=b["e"], dade_k=b["dade_k"])
            if b["principal"]:
                checks["principal_sylow"].checked += 1
                if dg["order"] != full:
                    hit("principal_sylow", rep, b)
    bugs = sum(len(c.violations) for c in checks.values() if c.severity == "bug")
    findings = sum(len(c.violations) for c in checks.values() if c.severity == "finding")
    return {"checks": [c.to_json() for c in checks.values()], "bugs": bugs, "findings": findings}


# --- corpus scanning ------------------------------------------------------------------

def expand_corpus(corpus) -> list[dict]:
    jobs = []
    for entry in corpus:
        for p in entry["primes"]:
            jobs.append({"group": entry["group"], "p": int(p),
                         "method": entry.get("method", "auto"), "table": entry.get("table")})
    return jobs


def job_key(job: dict) -> str:
    return json.dumps([spec_label(job["group"]), job["p"], job["method"], job["table"]])


def run_job(job: dict) -> dict:
    """Analyze one (G, p); errors are captured into the result, never raised."""
    out = {"group": spec_label(job["group"]), "p": job["p"], "method": job["method"]}
    try:
        rep = analyze(job["group"], job["p"], job["method"], job["table"])
        out["report"] = rep.to_json()
    except StageError as exc:
        out["error"] = {"stage": exc.stage, "type": type(exc.cause).__name__, "message": str(exc.cause)}
    except Exception as exc:  # noqa: BLE001 - a scan records every job failure
        out["error"] = {"stage": "unknown", "type": type(exc).__name__, "message": str(exc)}
    return out


def _load_checkpoint(path: Path) -> dict:
    done = {}
    if path.exists():
        for line in path.read_text().splitlines():
            if line.strip():
                rec = json.loads(line)
                done[rec["key"]] = rec["result"]
    return done


def scan(corpus, jobs: int = 1, checkpoint=None) -> dict:
    """Analyze every (group, prime) of a corpus; per-job failures are recorded, not raised."""
    if isinstance(corpus, (str, Path)):
        corpus = json.loads(Path(corpus).read_text())
    todo = expand_corpus(corpus)
    keys = [job_key(j) for j in todo]
    ckpt = Path(checkpoint) if checkpoint else None
    done = _load_checkpoint(ckpt) if ckpt else {}
    results: dict = {k: done[k] for k in keys if k in done}
    pending = [(k, j) for k, j in zip(keys, todo) if k not in results]

    def record(k, res):
        results[k] = res
        if ckpt:
            with ckpt.open("a") as fh:
                fh.write(json.dumps({"key": k, "result": res}, sort_keys=True) + "\n")

    if jobs > 1 and len(pending) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [(k, pool.submit(run_job, j)) for k, j in pending]
            for k, fut in futures:
                record(k, fut.result())
    else:
        for k, j in pending:
            log.info("analyzing %s", k)
            record(k, run_job(j))
    ordered = [results[k] for k in keys]
    reports = [r["report"] for r in ordered if "report" in r]
    counts = {v.value: 0 for v in Verdict}
    for rep in reports:
        for name, c in rep["counts"].items():
            counts[name] += c
    return {
        "jobs": ordered,
        "counts": counts,
        "exotic_groups": sorted({(r["group"], r["p"]) for r in reports if r["exotic"]}),
        "errors": sum(1 for r in ordered if "error" in r),
        "general_cases": verify_general_cases(reports),
    }


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"
