from lktmap import enumerate_fpf, verify_zuckerman, zuckerman_terms
from lktmap.cousin import closure_leq

# Orbits of Sp(4) on the flag variety of GL(4) and their closure order
orbits = enumerate_fpf(2)
for a in orbits:
    below = [str(b) for b in orbits if b != a and closure_leq(b, a)]
    print(f"{a}: closure contains {below or 'nothing else'}")

# The alternating sum of standard modules resolving the trivial representation
for n in (2, 3):
    terms = zuckerman_terms(n)
    print(f"\nn={n}: {len(terms)} orbits")
    for t in terms:
        print(f"  degree {t.degree}  {str(t.involution):20} {t.standard_param}")
    rep = verify_zuckerman(n, 8)
    print(f"  checked {rep['checked']} K-types: {'ok' if rep['ok'] else rep['failures'][:3]}")
