"""Headless figure rendering for density and survey runs."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

_STATUS_COLORS = {
    "AGREE": "tab:green",
    "DISAGREE": "tab:red",
    "UNCONFIRMED-true": "tab:gray",
    "UNCONFIRMED-false": "tab:orange",
}


def save_density_figure(rows, path) -> None:
    """Plot w(n)/pi(n) against n with the 1/4 limit line."""
    ns = [r[0] for r in rows]
    ratios = [r[3] for r in rows]
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    ax.semilogx(ns, ratios, marker="o", color="tab:blue", label="w(n) / pi(n)")
    ax.axhline(0.25, color="tab:red", linestyle="--", label="limit 1/4")
    ax.set_xlabel("n")
    ax.set_ylabel("fraction of primes p < n with PSL(2,p) wexp-solvable")
    ax.set_title("Density of wexp-solvable PSL(2,p)")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_survey_figure(rows, path) -> None:
    """Scatter of survey rows: q against group order, colored by status."""
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    seen_status = []
    for row in rows:
        color = _STATUS_COLORS.get(row["status"], "tab:purple")
        marker = "o" if row["classifier"] else "x"
        label = None
        if row["status"] not in seen_status:
            seen_status.append(row["status"])
            label = row["status"]
        ax.scatter(row["q"], row["order"], color=color, marker=marker, label=label)
    ax.set_yscale("log")
    ax.set_xlabel("q")
    ax.set_ylabel("|PSL(2,q)|")
    ax.set_title("Classifier vs computation (circle: classifier true, cross: false)")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
