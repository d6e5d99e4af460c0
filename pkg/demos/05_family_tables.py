"""Infinite-family sweeps: every member is certified NotInT.

Two parametric families are swept here:
  * gap 4: T(p, p+4) for odd p >= 9 with p = 1, 3 (mod 8);
  * even gap r: T(p, p+r) for p = 2nr + 1 (r >= 4) and p = 2nr - 1 (r >= 8)
    under the bound 2p >= (r/2 +- 1)^2 - r/2.
Even candidates die on the parity/divisibility filters; odd candidates die
because the chain's characteristic-sphere equation pins w^2 to a value
strictly between consecutive squares.
"""

from torustwist import TorusKnotParams, classify
from torustwist.cli import _family_rows

for table in ("thm1.3", "thm1.5"):
    rows = _family_rows(table, 2)
    print(f"family selector {table!r} (n <= 2): {len(rows)} knots")
    for label, p, q in rows:
        cert = classify(TorusKnotParams(p, q))
        assert cert.verdict == "NotInT"
    largest = max(rows, key=lambda r: r[2])
    print(f"  all NotInT; largest member T({largest[1]},{largest[2]})")
    print()

print("A sample certificate line of reasoning, T(9,13):")
cert = classify(TorusKnotParams(9, 13))
for e in cert.eliminations:
    print(f"  w={e.omega}: {e.reason}")
