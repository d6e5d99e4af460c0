"""Candidates the obstruction pipeline cannot eliminate.

T(5,7) is the smallest non-exceptional torus knot.  Every filter passes the
single candidate (n, w) = (1, 6): whether T(5,7) arises from one twist is
genuinely open, and the certificate says exactly that.  The gap-2 family
T(p, p+2) behaves the same way, surviving only at w = p + 1.

The gap-4 family T(p, p+4) with p = 5, 7 (mod 8) is sharper: the
characteristic-sphere equation leaves only w = p + 2, but whenever 3
divides p + 2 the divisibility test at d = 3 kills that last candidate
too, upgrading the verdict to NotInT.
"""

from torustwist import TorusKnotParams, classify

rows = [(5, 7), (7, 9), (9, 11),            # gap 2: survivor w = p+1
        (7, 11), (13, 17), (15, 19)]        # gap 4, p = 5,7 (mod 8)
for p, q in rows:
    cert = classify(TorusKnotParams(p, q))
    survivors = [(s.n, s.omega) for s in cert.survivors] or "none"
    print(f"T({p},{q}): {cert.verdict:<10} survivors: {survivors}")

print()
cert = classify(TorusKnotParams(13, 17))
print("Why T(13,17) closes: the chain through T(4,13) and T(5,4) forces")
tpl = cert.templates[0]
print(f"  w^2 = {tpl.omega_squared}, admissible: {list(tpl.admissible)},")
print(f"  but sigma_3(T(13,17)) = {cert.sigma_inputs[3]} fails the "
      f"divisibility test for w = 15:")
print(f"  2*[3/2]*(3-[3/2])/9 * 15^2 = 100, and 100 is neither "
      f"{-cert.sigma_inputs[3]} nor {2 - cert.sigma_inputs[3]}.")
