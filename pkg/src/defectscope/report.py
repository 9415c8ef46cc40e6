"""Delimited output and figures for classification reports."""

from __future__ import annotations

import csv
import io
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .classify import Verdict, dumps  # noqa: E402

BLOCK_COLUMNS = ["group", "p", "block", "principal", "d", "defect_order", "kB", "k0B", "kD",
                 "abelian", "cyclic", "e", "dade_k", "verdict"]

COLORS = {Verdict.STRONGLY_KD.value: "tab:green", Verdict.KD.value: "tab:blue",
          Verdict.EXOTIC.value: "tab:red"}


def block_rows(reports) -> list[dict]:
    rows = []
    for rep in reports:
        for b in rep["blocks"]:
            dg = b["defect_group"]
            rows.append({
                "group": rep["group"], "p": rep["p"], "block": b["index"],
                "principal": int(b["principal"]), "d": b["d"], "defect_order": dg["order"],
                "kB": b["kB"], "k0B": b["k0B"], "kD": dg["k_D"],
                "abelian": int(dg["abelian"]), "cyclic": int(dg["cyclic"]),
                "e": "" if b["e"] is None else b["e"],
                "dade_k": "" if b["dade_k"] is None else b["dade_k"],
                "verdict": b["verdict"],
            })
    return rows


def to_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=BLOCK_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(block_rows(reports))
    return buf.getvalue()


def plot_kb_vs_kd(reports, path) -> Path:
    """Scatter of k(B) against k(D), one point per block, colored by verdict."""
    rows = block_rows(reports)
    fig, ax = plt.subplots(figsize=(6, 5))
    top = max([r["kB"] for r in rows] + [r["kD"] for r in rows] + [2])
    ax.plot([1, top], [1, top], color="0.7", linewidth=1, zorder=0)
    for verdict, color in COLORS.items():
        pts = [r for r in rows if r["verdict"] == verdict]
        if pts:
            ax.scatter([r["kD"] for r in pts], [r["kB"] for r in pts], c=color,
                       label=f"{verdict} ({len(pts)})", s=28, alpha=0.8)
    # one stacked label per exotic point; several (G, p) often share coordinates
    labels: dict = {}
    for r in rows:
        if r["verdict"] == Verdict.EXOTIC.value:
            labels.setdefault((r["kD"], r["kB"]), []).append(f'{r["group"]}, p={r["p"]}')
    for xy, names in sorted(labels.items()):
        ax.annotate("\n".join(dict.fromkeys(names)), xy, fontsize=7, xytext=(5, 0),
                    textcoords="offset points", va="top")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("k(D)")
    ax.set_ylabel("k(B)")
    ax.set_title("Blocks: k(B) against k(D)")
    if rows:
        ax.legend(loc="upper left", fontsize=8)
    return _save(fig, path)


def plot_verdict_counts(counts: dict, path) -> Path:
    fig, ax = plt.subplots(figsize=(5, 3.5))
    names = [v.value for v in Verdict]
    vals = [counts.get(n, 0) for n in names]
    ax.bar(names, vals, color=[COLORS[n] for n in names])
    for i, v in enumerate(vals):
        ax.text(i, v, str(v), ha="center", va="bottom", fontsize=9)
    ax.set_ylabel("blocks")
    ax.set_title("Verdicts")
    return _save(fig, path)


def _save(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=120, metadata={"Software": None})
    plt.close(fig)
    return path


def write_bundle(reports, counts: dict, out_dir, summary: dict | None = None) -> dict:
    """Write report.json, blocks.csv and the two figures; return their paths."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {
        "json": out / "report.json",
        "csv": out / "blocks.csv",
        "kb_vs_kd": out / "kb_vs_kd.png",
        "verdicts": out / "verdicts.png",
    }
    paths["json"].write_text(dumps(summary if summary is not None else {"reports": reports}))
    paths["csv"].write_text(to_csv(reports))
    plot_kb_vs_kd(reports, paths["kb_vs_kd"])
    plot_verdict_counts(counts, paths["verdicts"])
    return paths
