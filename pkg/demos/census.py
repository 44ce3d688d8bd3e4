"""Replay the t = 5 census and print the audit trail of the interesting cases."""

import sys

from steiner.census import explain, matches_expected, run_census, survivors

t = int(sys.argv[1]) if len(sys.argv) > 1 else 5
reports = run_census(t, 2048, 10)
for r in reports:
    if not r.case_id.startswith("as_PSL2(") or r.verdict != "eliminated":
        print(explain(r))
        print()
print("survivors:", survivors(reports))
print("matches expected:", matches_expected(reports, t))
