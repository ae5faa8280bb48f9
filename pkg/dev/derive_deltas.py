"""Dev: derive per-presentation delta letter-sequences from the orbits.

For each tuple in the orbit and each candidate presentation, find every
assignment of letters to tuple positions for which the relations hold.  The
induced lambda (letter written at position k) tells which letter order maps
onto the delta-ordered tuple.  Grouping tuples by their lambda sets shows how
the printed occurrence counts split.
"""

import sys, time
from collections import Counter
from itertools import permutations, product
from functools import reduce

sys.path.insert(0, "src")

from cyclohecke.scalars import Cyc, gauss_sum, zeta
from cyclohecke.groups import ReflectionGroup
from cyclohecke.braids import Presentation, hurwitz_orbit


def lam_sets(group, orbit, pres):
    """For each tuple: the set of letter-orders lambda realizing pres."""
    out = {}
    n = pres.ngens
    for tup in sorted(orbit):
        lams = set()
        for perm in permutations(range(n)):
            # letter j sits at position perm[j]; relations on images
            images = tuple(tup[perm[j]] for j in range(n))
            if pres.relations_hold(group, images):
                # lambda: position k holds letter inv(perm)[k]
                invp = [0] * n
                for j in range(n):
                    invp[perm[j]] = j
                lams.add(tuple(invp))
            if len(lams) > 50:
                break
        if lams:
            out[tup] = frozenset(lams)
    return out


def fmt(lams, letters):
    return sorted("".join(letters[j] for j in lam) for lam in lams)


def report(name, group, orbit, presentations):
    print(f"== {name} (orbit {len(orbit)})")
    for pres in presentations:
        ls = lam_sets(group, orbit, pres)
        hist = Counter(frozenset(fmt(l, pres.letters)) for l in ls.values())
        print(f"  {pres.name}: {len(ls)} tuples match;")
        for k, v in sorted(hist.items(), key=lambda kv: -kv[1]):
            print(f"      {v} tuples with lambda set {sorted(k)}")


# ---- G443 ----
def monomial_reflection(n, i, j, z):
    m = [[Cyc.rational(0)] * n for _ in range(n)]
    for k in range(n):
        if k not in (i, j):
            m[k][k] = Cyc.rational(1)
    m[j][i] = z
    m[i][j] = z.inverse()
    return m


z4 = zeta(4)
G443 = ReflectionGroup(
    "G(4,4,3)",
    [monomial_reflection(3, 0, 1, z4**0), monomial_reflection(3, 0, 1, z4),
     monomial_reflection(3, 1, 2, Cyc.rational(1))],
    degrees=(4, 8, 3), conductor=4,
)
P443 = [
    Presentation.from_strings("P1", "tuv", (2, 2, 2),
        [("tvt", "vtv"), ("uvu", "vuv"), ("tutu", "utut"), ("vutvut", "utvutv")]),
    Presentation.from_strings("P2", "tuv", (2, 2, 2),
        [("tvt", "vtv"), ("uvu", "vuv"), ("tut", "utu"), ("vtuvtuvt", "uvtuvtuv")]),
]
orbit = hurwitz_orbit(G443, tuple(G443.generator_indices))
report("G443", G443, orbit, P443)

# ---- G27 P2/P5 ----
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
P27_25 = [
    Presentation.from_strings("P2", "stu", (2, 2, 2),
        [("sus", "usu"), ("stst", "tsts"), ("tutut", "ututu"), ("utsutst", "sutsuts")]),
    Presentation.from_strings("P5", "stu", (2, 2, 2),
        [("sts", "tst"), ("susu", "usus"), ("ututu", "tutut"), ("tustusu", "stustus")]),
]
orbit27 = hurwitz_orbit(G27, tuple(G27.generator_indices))
report("G27", G27, orbit27, P27_25)

# ---- G24 (sanity: lambda structure of P1..P3) ----
r7 = gauss_sum(7)
a24 = (-1 + r7) * half
G24 = ReflectionGroup(
    "G24",
    [[[1, 0, 0], [0, 1, 0], [1, 1, -1]],
     [[1, 0, 0], [a24, -1, 1], [0, 0, 1]],
     [[-1, -(1 + r7) * half, 1], [0, 1, 0], [0, 0, 1]]],
    degrees=(4, 6, 14), conductor=7,
)
P24 = [
    Presentation.from_strings("P1", "stu", (2, 2, 2),
        [("sts", "tst"), ("tutu", "utut"), ("sus", "usu"), ("tustustus", "utustustu")]),
    Presentation.from_strings("P2", "stu", (2, 2, 2),
        [("stst", "tsts"), ("tutu", "utut"), ("sus", "usu"), ("tstustu", "stustus")]),
    Presentation.from_strings("P3", "stu", (2, 2, 2),
        [("stst", "tsts"), ("tutu", "utut"), ("susu", "usus"),
         ("tustust", "stustus"), ("stustus", "ustustu")]),
]
orbit24 = hurwitz_orbit(G24, tuple(G24.generator_indices))
report("G24", G24, orbit24, P24)

# ---- G334 ----
G334 = ReflectionGroup(
    "G(3,3,4)",
    [monomial_reflection(4, 0, 1, zeta(3)**0), monomial_reflection(4, 0, 1, zeta(3)),
     monomial_reflection(4, 1, 2, Cyc.rational(1)), monomial_reflection(4, 2, 3, Cyc.rational(1))],
    degrees=(3, 6, 9, 4), conductor=3,
)
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
orbit334 = hurwitz_orbit(G334, tuple(G334.generator_indices))
report("G334", G334, orbit334, P334)
