"""Summary figures for suite reports, rendered alongside the text and
delimited outputs."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt


def render_report_figure(result, path: str) -> None:
    """Two panels: per-section pass/fail counts and per-section timings."""
    by_section = {}
    for cid, ok, _ in result.sorted_checks():
        section = cid.split(":", 1)[0]
        passed, failed = by_section.get(section, (0, 0))
        if ok:
            passed += 1
        else:
            failed += 1
        by_section[section] = (passed, failed)
    sections = sorted(by_section)
    passed = [by_section[s][0] for s in sections]
    failed = [by_section[s][1] for s in sections]
    timing = dict(result.timings)
    secs = [timing.get(s, 0.0) for s in sections]

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(11, max(3.0, 0.35 * len(sections) + 1.5)))
    ypos = range(len(sections))
    ax1.barh(ypos, passed, color="#2a9d8f", label="pass")
    ax1.barh(ypos, failed, left=passed, color="#e76f51", label="fail")
    ax1.set_yticks(list(ypos))
    ax1.set_yticklabels(sections, fontsize=8)
    ax1.invert_yaxis()
    ax1.set_xlabel("checks")
    ax1.set_title(f"{result.subject} (seed={result.seed})", fontsize=10)
    ax1.legend(loc="lower right", fontsize=8)

    ax2.barh(ypos, secs, color="#577590")
    ax2.set_yticks(list(ypos))
    ax2.set_yticklabels([])
    ax2.invert_yaxis()
    ax2.set_xlabel("seconds")
    ax2.set_title("section timing", fontsize=10)

    fig.suptitle(
        f"{sum(passed)}/{sum(passed) + sum(failed)} checks passed",
        fontsize=11, y=0.99,
    )
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
