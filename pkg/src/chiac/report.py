"""Rendering of verification reports: delimited claims table and summary figures.

The JSON report from `verify_paper` is the source of truth; this module only
projects it to a CSV and two PNG charts written alongside the JSON file.
"""

from __future__ import annotations

import csv
from pathlib import Path

CSV_COLUMNS = (
    "f_name",
    "f_size",
    "status",
    "source",
    "theorem_bound",
    "theorem_source",
    "swept_max",
    "exact_attained",
    "verdict",
    "note",
)


def write_claims_csv(report: dict, path) -> Path:
    path = Path(path)
    with path.open("w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(CSV_COLUMNS)
        for row in report["claims"]:
            theorem = row.get("theorem_bound") or {}
            writer.writerow(
                [
                    row["f_name"],
                    row["f_size"],
                    row["status"],
                    row["source"],
                    theorem.get("bound", ""),
                    theorem.get("source", ""),
                    row["swept_max"],
                    "" if row["exact_attained"] is None else row["exact_attained"],
                    row["verdict"],
                    row.get("note") or "",
                ]
            )
    return path


def _claimed_level(status: str) -> int | None:
    if status.startswith("="):
        return int(status[1:])
    if status.startswith("<="):
        return int(status[2:])
    if status.startswith(">="):
        return int(status[2:])
    return None


def write_figures(report: dict, stem) -> list[Path]:
    """Two charts next to the report: claim bounds vs swept maxima, catalogue growth."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    stem = Path(stem)
    written = []

    claims = report["claims"]
    names = [row["f_name"] for row in claims]
    swept = [row["swept_max"] for row in claims]
    levels = [_claimed_level(row["status"]) for row in claims]
    positions = range(len(claims))

    fig, ax = plt.subplots(figsize=(7.5, 0.36 * len(claims) + 1.4))
    ax.barh(positions, swept, color="#4878a8", label="swept max of min_colours")
    for y, (level, row) in enumerate(zip(levels, claims)):
        if level is not None:
            marker = "o" if row["status"].startswith("=") else (
                "<" if row["status"].startswith("<=") else ">"
            )
            ax.plot([level], [y], marker=marker, color="#c44e52", linestyle="none",
                    markersize=7)
        else:
            label = "unbounded" if row["status"] == "infinite" else "unknown"
            ax.annotate(label, (swept[y] + 0.15, y), va="center", fontsize=8,
                        color="#555555")
    ax.set_yticks(list(positions))
    ax.set_yticklabels(names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel(f"colours (catalogue swept to size {report['max_size']})")
    ax.set_title("claimed values/bounds (markers) vs swept maxima (bars)")
    ax.legend(loc="lower right", fontsize=8)
    fig.tight_layout()
    claims_png = stem.with_name(stem.name + ".claims.png")
    fig.savefig(claims_png, dpi=150)
    plt.close(fig)
    written.append(claims_png)

    counts = report["catalogue_counts"]
    sizes = sorted(int(k) for k in counts)
    fig, ax = plt.subplots(figsize=(5.5, 3.6))
    ax.semilogy(sizes, [counts[str(s)] for s in sizes], marker="o", color="#4878a8")
    ax.set_xticks(sizes)
    ax.set_xlabel("elements")
    ax.set_ylabel("isomorphism classes")
    ax.set_title("poset catalogue growth")
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    counts_png = stem.with_name(stem.name + ".catalogue.png")
    fig.savefig(counts_png, dpi=150)
    plt.close(fig)
    written.append(counts_png)

    return written
