"""Dev: pin allowed delta letter-orders for G27 P2/P5 and G443 P1.

Anchors: the published change-of-generators formulas.  P2 of G27 is realized
by the generating set {t, t u t^-1, s}; the orbit tuples carrying exactly that
set, matched against P2's relations, fix which letter-orders count as genuine
P2 realizations.  P5 gets the complementary orders.  For G(4,4,3), P1's own
generators (t, u, v) anchor the P1 orders; the mirror-reversed orders are
added so that the opposite realization counts as P1 as well.
"""

import sys
from collections import Counter
from itertools import permutations

sys.path.insert(0, "src")

from cyclohecke.scalars import Cyc, gauss_sum, zeta
from cyclohecke.groups import ReflectionGroup
from cyclohecke.braids import Presentation, hurwitz_orbit, parse_word

half = Cyc.rational(1) / 2
r5 = gauss_sum(5).promote(15)
z3 = zeta(3).promote(15)
X, Y = Cyc.rational(1), Cyc.rational(-1)
cc = 1 + z3 * z3 * (1 - r5) * half
nodes = ["12", "23", "13"]
edges = [("12", "23", cc), ("12", "13", Cyc.rational(-2)), ("23", "12", -X * Y / cc),
         ("23", "13", -Y), ("13", "12", X * Y), ("13", "23", X)]
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
G27 = ReflectionGroup("G27", mats, degrees=(6, 12, 30), conductor=15)

P2 = Presentation.from_strings("P2", "stu", (2, 2, 2),
    [("sus", "usu"), ("stst", "tsts"), ("tutut", "ututu"), ("utsutst", "sutsuts")])

orbit27 = hurwitz_orbit(G27, tuple(G27.generator_indices))


def image_of_word(group, word, letters="stu"):
    img = 0
    for g in parse_word(word, letters):
        e = group.generator_indices[g] if g >= 0 else group.inverse[group.generator_indices[-1 - g]]
        img = group.mul(img, e)
    return img


# anchor set for P2 of G27: generators {t, t u t^-1, s}
anchor = {image_of_word(G27, w) for w in ("t", "tuT", "s")}
print("anchor set size:", len(anchor))

hits = []
for tup in sorted(orbit27):
    if set(tup) != anchor:
        continue
    for perm in permutations(range(3)):
        images = tuple(tup[perm[j]] for j in range(3))
        if P2.relations_hold(G27, images):
            invp = [0] * 3
            for j in range(3):
                invp[perm[j]] = j
            lam = "".join("stu"[j] for j in invp)
            hits.append((tup, lam))
print("anchor tuples matching P2 and their lambdas:")
for tup, lam in hits:
    print("   ", tup, lam)

lams = sorted({lam for _, lam in hits})
print("P2 anchor lambdas:", lams)

# count how many orbit tuples match P2 under each lambda
by_lam = Counter()
for tup in sorted(orbit27):
    for perm in permutations(range(3)):
        images = tuple(tup[perm[j]] for j in range(3))
        if P2.relations_hold(G27, images):
            invp = [0] * 3
            for j in range(3):
                invp[perm[j]] = j
            by_lam["".join("stu"[j] for j in invp)] += 1
print("tuples per lambda:", dict(by_lam))


def mirror(lam):
    return lam[::-1]


allowed_p2 = set()
for _, lam in hits:
    allowed_p2.add(lam)
print("mirrors of anchor lambdas:", sorted(mirror(l) for l in allowed_p2))
