"""Dev: G27, G(4,4,3), G(3,3,4) Hurwitz/classification/Poincare."""

import sys, time
from functools import reduce

sys.path.insert(0, "src")

from cyclohecke.scalars import Cyc, gauss_sum, zeta
from cyclohecke.groups import ReflectionGroup, poincare_coefficients
from cyclohecke.braids import Presentation, hurwitz_orbit, classify_orbit, parse_word

half = Cyc.rational(1) / 2
r5 = gauss_sum(5).promote(15)
z3 = zeta(3).promote(15)
X, Y = Cyc.rational(1), Cyc.rational(-1)
cconst = 1 + z3 * z3 * (1 - r5) * half

nodes = ["12", "23", "13"]
edges = [
    ("12", "23", cconst),
    ("12", "13", Cyc.rational(-2)),
    ("23", "12", -X * Y / cconst),
    ("23", "13", -Y),
    ("13", "12", X * Y),
    ("13", "23", X),
]
gam = {nd: [0 if g in {int(c) - 1 for c in nd} else 1 for g in range(3)] for nd in nodes}
mats = []
for g in range(3):
    m = [[Cyc.rational(0)] * 3 for _ in range(3)]
    for i, nd in enumerate(nodes):
        m[i][i] = X if gam[nd][g] == 0 else Y
    for (a, b, lab) in edges:
        i, j = nodes.index(a), nodes.index(b)
        if gam[a][g] == 1 and gam[b][g] == 0:
            m[i][j] = lab
    mats.append(m)

t0 = time.time()
G27 = ReflectionGroup("G27", mats, degrees=(6, 12, 30), conductor=15)
print(f"G27: |W|={G27.size} [{time.time()-t0:.1f}s]")

P27 = [
    Presentation.from_strings("P1", "stu", (2, 2, 2),
        [("tst", "sts"), ("usu", "sus"), ("utut", "tutu"),
         ("utu" + "stu" * 3, "tus" * 3 + "tut")]),
    Presentation.from_strings("P2", "stu", (2, 2, 2),
        [("sus", "usu"), ("stst", "tsts"), ("tutut", "ututu"),
         ("utsutst", "sutsuts")]),
    Presentation.from_strings("P3", "stu", (2, 2, 2),
        [("sts", "tst"), ("tutut", "ututu"), ("sus", "usu"),
         ("tutustustu", "utustustus")]),
    Presentation.from_strings("P4", "stu", (2, 2, 2),
        [("stst", "tsts"), ("tutut", "ututu"), ("susus", "ususu"),
         ("tustust", "stustus"), ("ustustus", "stustusu")]),
    # P5 = P2 with t and u exchanged
    Presentation.from_strings("P5", "stu", (2, 2, 2),
        [("sts", "tst"), ("susu", "usus"), ("ututu", "tutut"),
         ("tustusu", "stustus")]),
]

gi = G27.generator_indices
t0 = time.time()
orbit = hurwitz_orbit(G27, tuple(gi))
print(f"G27 hurwitz: {len(orbit)} (formula {G27.hurwitz_cardinality()}) [{time.time()-t0:.1f}s]")
t0 = time.time()
res = classify_orbit(G27, orbit, P27)
print("G27 classify:", res["counts"], "unclassified:", len(res["unclassified"]),
      "ambiguous:", len(res["ambiguous"]), f"[{time.time()-t0:.1f}s]")


def image_of_word(group, word, letters="stu"):
    img = 0
    for g in parse_word(word, letters):
        e = group.generator_indices[g] if g >= 0 else group.inverse[group.generator_indices[-1 - g]]
        img = group.mul(img, e)
    return img


t0 = time.time()
print("G27 P1 poincare:", poincare_coefficients(G27, gi))
p2g = [image_of_word(G27, w) for w in ("t", "tuT", "s")]
p3g = [image_of_word(G27, w) for w in ("s", "Sus", "t")]
p4g = [image_of_word(G27, w) for w in ("t", "u", "UTstu")]
print("G27 P2 poincare:", poincare_coefficients(G27, p2g))
print("G27 P3 poincare:", poincare_coefficients(G27, p3g))
print("G27 P4 poincare:", poincare_coefficients(G27, p4g))
print(f"[{time.time()-t0:.1f}s]")

exp = {
    "P1": [1,3,6,10,15,22,31,44,62,87,114,139,168,200,223,218,191,168,150,125,88,51,26,12,5,1],
    "P2": [1,3,6,11,19,32,49,71,100,137,177,218,255,270,256,208,152,107,59,22,6,1],
    "P3": [1,3,6,10,16,25,38,57,78,106,138,175,210,245,256,228,192,164,121,60,21,6,3,1],
    "P4": [1,3,6,12,23,42,73,117,164,217,266,288,277,257,211,127,54,16,5,1],
}
print("P1 match:", poincare_coefficients(G27, gi) == exp["P1"])
print("P2 match:", poincare_coefficients(G27, p2g) == exp["P2"])
print("P3 match:", poincare_coefficients(G27, p3g) == exp["P3"])
print("P4 match:", poincare_coefficients(G27, p4g) == exp["P4"])
