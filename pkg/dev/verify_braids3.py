"""Dev: imprimitive G(4,4,3) and G(3,3,4): find presentation-matching seeds."""

import sys, time
from itertools import permutations, product

sys.path.insert(0, "src")

from cyclohecke.scalars import Cyc, zeta
from cyclohecke.groups import ReflectionGroup, poincare_coefficients
from cyclohecke.braids import Presentation, hurwitz_orbit, classify_orbit


def monomial_reflection(n, i, j, z):
    """e_i -> z e_j, e_j -> z^-1 e_i, rest fixed (order 2)."""
    m = [[Cyc.rational(0)] * n for _ in range(n)]
    for k in range(n):
        if k not in (i, j):
            m[k][k] = Cyc.rational(1)
    m[j][i] = z
    m[i][j] = z.inverse()
    return m


def build_Geer(e, r, name, degrees):
    z = zeta(e)
    gens = [monomial_reflection(r, 0, 1, z ** k) for k in range(2)]
    gens += [monomial_reflection(r, i, i + 1, Cyc.rational(1)) for i in range(1, r - 1)]
    return ReflectionGroup(name, gens, degrees=degrees, conductor=e)


# ---- G(4,4,3) --------------------------------------------------------------
t0 = time.time()
G443 = build_Geer(4, 3, "G(4,4,3)", (4, 8, 3))
print(f"G443: |W|={G443.size} refl={len(G443.reflections)} [{time.time()-t0:.1f}s]")

P443 = [
    Presentation.from_strings("P1", "tuv", (2, 2, 2),
        [("tvt", "vtv"), ("uvu", "vuv"), ("tutu", "utut"),
         ("vutvut", "utvutv")]),
    Presentation.from_strings("P2", "tuv", (2, 2, 2),
        [("tvt", "vtv"), ("uvu", "vuv"), ("tut", "utu"),
         ("vtuvtuvt", "uvtuvtuv")]),
]

refl = G443.reflections
h = G443.coxeter_number
print("h:", h, "formula:", G443.hurwitz_cardinality())

# find a P1-satisfying delta-ordered triple: relations hold with (t,u,v) = tuple
found = None
for tup in product(refl, repeat=3):
    c = 0
    for a in tup:
        c = G443.mul(c, a)
    if G443.element_order(c) != h:
        continue
    if P443[0].relations_hold(G443, tup):
        found = tup
        break
print("P1 seed:", found)
orbit = hurwitz_orbit(G443, found)
print("orbit size:", len(orbit))
res = classify_orbit(G443, orbit, P443)
print("classify:", res["counts"], "unclassified:", len(res["unclassified"]),
      "ambiguous:", len(res["ambiguous"]))
print("P1 poincare:", poincare_coefficients(G443, list(found)))
exp1 = [1, 3, 6, 10, 15, 22, 23, 13, 3]
print("P1 match:", poincare_coefficients(G443, list(found)) == exp1)

# a P2 representative from the orbit
exp2 = [1, 3, 6, 9, 12, 15, 18, 21, 11]
for tup in sorted(orbit):
    for perm in permutations(range(3)):
        imgs = tuple(tup[perm[k]] for k in range(3))
        if P443[1].relations_hold(G443, imgs):
            pc = poincare_coefficients(G443, list(tup))
            print("P2 rep:", tup, "poincare match:", pc == exp2)
            break
    else:
        continue
    break

# ---- G(3,3,4) --------------------------------------------------------------
t0 = time.time()
G334 = build_Geer(3, 4, "G(3,3,4)", (3, 6, 9, 4))
print(f"G334: |W|={G334.size} refl={len(G334.reflections)} [{time.time()-t0:.1f}s]")

P334 = [
    Presentation.from_strings("P1", "tuvw", (2, 2, 2, 2),
        [("utu", "tut"), ("vtv", "tvt"), ("vuv", "uvu"), ("vwv", "wvw"),
         ("tw", "wt"), ("uw", "wu"), ("vtuvtu", "uvtuvt")]),
    Presentation.from_strings("P2", "tuvw", (2, 2, 2, 2),
        [("wtw", "twt"), ("utu", "tut"), ("uvu", "vuv"), ("wvw", "vwv"),
         ("tv", "vt"), ("wu", "uw"), ("vwtuvwtuv", "wtuvwtuvw")]),
    Presentation.from_strings("P3", "tuvw", (2, 2, 2, 2),
        [("tw", "wt"), ("uwu", "wuw"), ("uvu", "vuv"), ("vwv", "wvw"),
         ("tut", "utu"), ("tvt", "vtv"), ("uvwu", "wuvw"), ("tuvtuv", "vtuvtu")]),
    Presentation.from_strings("P4", "tuvw", (2, 2, 2, 2),
        [("tvt", "vtv"), ("uwu", "wuw"), ("twt", "wtw"), ("twvt", "vtwv"),
         ("wvuw", "uwvu"), ("tut", "utu"), ("wvw", "vwv"), ("uvu", "vuv"),
         ("tuwtuw", "wtuwtu"), ("tuvtuv", "uvtuvt")]),
    Presentation.from_strings("P5", "tuvw", (2, 2, 2, 2),
        [("wu", "uw"), ("tvt", "vtv"), ("vuv", "uvu"), ("tut", "utu"),
         ("twt", "wtw"), ("wvw", "vwv"), ("twvutw", "utwvut"),
         ("vutvut", "utvutv"), ("wvtwvt", "vtwvtw")]),
]

h4 = G334.coxeter_number
print("h:", h4, "formula:", G334.hurwitz_cardinality())
refl4 = G334.reflections
found4 = None
t0 = time.time()
for tup in product(refl4, repeat=4):
    c = 0
    for a in tup:
        c = G334.mul(c, a)
    if G334.element_order(c) != h4:
        continue
    if P334[0].relations_hold(G334, tup):
        found4 = tup
        break
print("P1 seed:", found4, f"[{time.time()-t0:.1f}s]")
t0 = time.time()
orbit4 = hurwitz_orbit(G334, found4)
print("orbit size:", len(orbit4), f"[{time.time()-t0:.1f}s]")
t0 = time.time()
res4 = classify_orbit(G334, orbit4, P334)
print("classify:", res4["counts"], "unclassified:", len(res4["unclassified"]),
      "ambiguous:", len(res4["ambiguous"]), f"[{time.time()-t0:.1f}s]")
