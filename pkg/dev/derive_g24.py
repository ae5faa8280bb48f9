"""Dev: find the decode convention for the order-2 graphs by brute force.

The 3-node graph for the G24 reflection deformation has nodes 12, 13, 23 and
six labelled edges.  We try the small space of conventions (node label = set
of generators at first/second eigenvalue x edge orientation) and keep the one
whose x->1, y->-1 specialization generates a group of order 336 satisfying the
P1 relations.
"""

import sys, time

sys.path.insert(0, "src")

from cyclohecke.scalars import Cyc, gauss_sum, zeta
from cyclohecke.groups import ReflectionGroup
from cyclohecke.matrices import mat, mat_mul, mat_eq, identity

r7 = gauss_sum(7)  # sqrt(-7)
half = Cyc.rational(1) / 2

# specialize x -> 1, y -> -1 directly in the edge labels
X = Cyc.rational(1)
Y = Cyc.rational(-1)

nodes = ["12", "13", "23"]
# edges: (from, to, label)
edges = [
    ("12", "13", X * (-1 - r7) * half),
    ("12", "23", -Y),
    ("13", "12", Y * (1 - r7) * half),
    ("13", "23", -Y),
    ("23", "12", X),
    ("23", "13", X),
]

P1_RELS = [
    ([0, 1, 0], [1, 0, 1]),          # sts = tst
    ([1, 2, 1, 2], [2, 1, 2, 1]),    # tutu = utut
    ([0, 2, 0], [2, 0, 2]),          # sus = usu
    ([1, 2, 0] * 3, [2, 1, 2] + [0, 1, 2] * 2),  # (tus)^3 = utu(stu)^2
]


def build(label_is_first_eigenvalue: bool, transpose: bool):
    # gamma[node][gen] = 0 or 1
    gam = {}
    for nd in nodes:
        ingroup = set(int(c) - 1 for c in nd)
        gam[nd] = [
            (0 if g in ingroup else 1) if label_is_first_eigenvalue else (1 if g in ingroup else 0)
            for g in range(3)
        ]
    mats = []
    for g in range(3):
        m = [[Cyc.rational(0)] * 3 for _ in range(3)]
        for i, nd in enumerate(nodes):
            m[i][i] = X if gam[nd][g] == 0 else Y
        for (a, b, lab) in edges:
            i, j = nodes.index(a), nodes.index(b)
            # edge a -> b carries the entry for generators with gamma_a = 1, gamma_b = 0
            if gam[a][g] == 1 and gam[b][g] == 0:
                if transpose:
                    m[j][i] = lab
                else:
                    m[i][j] = lab
        mats.append(mat(m))
    return mats


def relations_hold(mats):
    for lhs, rhs in P1_RELS:
        a = identity(3)
        for g in lhs:
            a = mat_mul(a, mats[g])
        b = identity(3)
        for g in rhs:
            b = mat_mul(b, mats[g])
        if not mat_eq(a, b):
            return False
    return True


for first in (True, False):
    for tr in (False, True):
        mats = build(first, tr)
        ok_order2 = all(mat_eq(mat_mul(m, m), identity(3)) for m in mats)
        ok_rel = relations_hold(mats)
        size = None
        if ok_order2 and ok_rel:
            try:
                t0 = time.time()
                G = ReflectionGroup("G24?", mats, degrees=(4, 6, 14), conductor=7)
                size = G.size
                print(
                    f"first={first} transpose={tr}: order2={ok_order2} rels={ok_rel} "
                    f"|W|={size} refl={len(G.reflections)} classes={len(G.conjugacy_classes)} "
                    f"({time.time()-t0:.1f}s)"
                )
                if size == 336:
                    c = G.coxeter_element()
                    print("  coxeter order:", G.element_order(c), " center:", len(G.center))
                    for g in mats:
                        print("  gen:", [[repr(x) for x in row] for row in g])
            except Exception as e:
                print(f"first={first} transpose={tr}: enumeration failed: {e}")
        else:
            print(f"first={first} transpose={tr}: order2={ok_order2} rels={ok_rel}")
