"""Dev: Hurwitz orbits, classification counts, Poincare polynomials."""

import sys, time

sys.path.insert(0, "src")

from cyclohecke.scalars import Cyc, gauss_sum, zeta
from cyclohecke.groups import ReflectionGroup, poincare_coefficients
from cyclohecke.braids import Presentation, hurwitz_orbit, classify_orbit, parse_word

half = Cyc.rational(1) / 2
r7 = gauss_sum(7)
a24 = (-1 + r7) * half

G24 = ReflectionGroup(
    "G24",
    [
        [[1, 0, 0], [0, 1, 0], [1, 1, -1]],
        [[1, 0, 0], [a24, -1, 1], [0, 0, 1]],
        [[-1, -(1 + r7) * half, 1], [0, 1, 0], [0, 0, 1]],
    ],
    degrees=(4, 6, 14),
    conductor=7,
)

P24 = [
    Presentation.from_strings("P1", "stu", (2, 2, 2),
        [("sts", "tst"), ("tutu", "utut"), ("sus", "usu"),
         ("tustustus", "utustustu")]),
    Presentation.from_strings("P2", "stu", (2, 2, 2),
        [("stst", "tsts"), ("tutu", "utut"), ("sus", "usu"),
         ("tstustu", "stustus")]),
    Presentation.from_strings("P3", "stu", (2, 2, 2),
        [("stst", "tsts"), ("tutu", "utut"), ("susu", "usus"),
         ("tustust", "stustus"), ("stustus", "ustustu")]),
]

gi = G24.generator_indices
seed = tuple(gi)
t0 = time.time()
orbit = hurwitz_orbit(G24, seed)
print(f"G24 hurwitz orbit: {len(orbit)} (formula {G24.hurwitz_cardinality()}) [{time.time()-t0:.1f}s]")
t0 = time.time()
res = classify_orbit(G24, orbit, P24)
print("G24 classify:", res["counts"], "unclassified:", len(res["unclassified"]),
      "ambiguous:", len(res["ambiguous"]), f"[{time.time()-t0:.1f}s]")

# Poincare for P1 (catalog gens)
print("G24 P1 poincare:", poincare_coefficients(G24, gi))

# P2 gens = {s, tut^-1, t}; P3 gens = {t, u, u^-1 t^-1 s t u}
def image_of_word(group, word, letters="stu"):
    img = 0
    for g in parse_word(word, letters):
        e = group.generator_indices[g] if g >= 0 else group.inverse[group.generator_indices[-1 - g]]
        img = group.mul(img, e)
    return img

p2gens = [image_of_word(G24, w) for w in ("s", "tuT", "t")]
p3gens = [image_of_word(G24, w) for w in ("t", "u", "UTstu")]
print("G24 P2 poincare:", poincare_coefficients(G24, p2gens))
print("G24 P3 poincare:", poincare_coefficients(G24, p3gens))

expected_P1 = [1,3,6,10,15,22,31,44,54,55,46,27,12,6,3,1]
expected_P2 = [1,3,6,11,18,29,42,52,58,56,39,16,4,1]
expected_P3 = [1,3,6,12,21,36,57,59,54,45,24,12,5,1]
print("P1 match:", poincare_coefficients(G24, gi) == expected_P1)
print("P2 match:", poincare_coefficients(G24, p2gens) == expected_P2)
print("P3 match:", poincare_coefficients(G24, p3gens) == expected_P3)

# also check P2/P3 relations hold for those images, and delta orders
for pres, gens in (("P2", p2gens), ("P3", p3gens)):
    p = next(x for x in P24 if x.name == pres)
    print(pres, "relations hold:", p.relations_hold(G24, tuple(gens)),
          "delta order:", G24.element_order(_pd := __import__('functools').reduce(lambda a, b: G24.mul(a, b), gens, 0)))
