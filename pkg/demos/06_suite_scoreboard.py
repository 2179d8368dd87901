#!/usr/bin/env python3
"""Score every built-in claimed-value suite and show the findings.

Each suite pairs a family of instances with a closed-form claimed value.
The harness computes the true value by both exact routes and reports
match (claimed formula as stated) and match_alt (the same formula read
with a +1 convention) side by side; a systematic False/True split across
a whole suite is the interesting outcome, not an error.
"""

from atnlab import SUITE_IDS, format_report, run_suite


for suite in SUITE_IDS:
    report = run_suite(suite)
    print(format_report(report, "table"))
    rows = report["instances"]
    plain = sum(1 for r in rows if r["match"] is True)
    alt = sum(1 for r in rows if r["match_alt"] is True)
    exceeded = sum(1 for r in rows if r["computed"] == "budget-exceeded")
    note = f"  -> {plain}/{len(rows)} match as stated"
    if any(r["match_alt"] is not None for r in rows):
        note += f", {alt}/{len(rows)} under the +1 reading"
    if exceeded:
        note += f", {exceeded} budget-exceeded"
    print(note)
    print()
