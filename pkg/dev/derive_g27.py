"""Dev: decode the G27 reflection-deformation graph and enumerate the group."""

import sys, time

sys.path.insert(0, "src")

from cyclohecke.scalars import Cyc, gauss_sum, zeta
from cyclohecke.groups import ReflectionGroup
from cyclohecke.matrices import mat, mat_mul, mat_eq, identity

r5 = gauss_sum(5).promote(15)  # sqrt(5) inside Q(zeta_15)
z3 = zeta(3).promote(15)
half = Cyc.rational(1) / 2

X = Cyc.rational(1)
Y = Cyc.rational(-1)

c = 1 + z3 * z3 * (1 - r5) * half  # c = 1 + zeta3^2 (1 - sqrt 5)/2

nodes = ["12", "23", "13"]
edges = [
    ("12", "23", -c),
    ("12", "13", Cyc.rational(-2)),
    ("23", "12", X * Y / c),
    ("23", "13", -Y),
    ("13", "12", X * Y),
    ("13", "23", X),
]

# P1 of G27: tst=sts, usu=sus, utut=tutu, utu(stu)^3 = (tus)^3 tut
S, T, U = 0, 1, 2
P1_RELS = [
    ([T, S, T], [S, T, S]),
    ([U, S, U], [S, U, S]),
    ([U, T, U, T], [T, U, T, U]),
    ([U, T, U] + [S, T, U] * 3, [T, U, S] * 3 + [T, U, T]),
]


def build(transpose: bool):
    gam = {}
    for nd in nodes:
        ingroup = set(int(ch) - 1 for ch in nd)
        gam[nd] = [0 if g in ingroup else 1 for g in range(3)]
    mats = []
    for g in range(3):
        m = [[Cyc.rational(0)] * 3 for _ in range(3)]
        for i, nd in enumerate(nodes):
            m[i][i] = X if gam[nd][g] == 0 else Y
        for (a, b, lab) in edges:
            i, j = nodes.index(a), nodes.index(b)
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


for tr in (False, True):
    mats = build(tr)
    ok2 = all(mat_eq(mat_mul(m, m), identity(3)) for m in mats)
    okr = relations_hold(mats)
    print(f"transpose={tr}: order2={ok2} rels={okr}")
    if ok2 and okr:
        t0 = time.time()
        G = ReflectionGroup("G27?", mats, degrees=(6, 12, 30), conductor=15)
        print(
            f"  |W|={G.size} refl={len(G.reflections)} classes={len(G.conjugacy_classes)} "
            f"center={len(G.center)} ({time.time()-t0:.1f}s)"
        )
        cx = G.coxeter_element()
        print("  coxeter order:", G.element_order(cx))
        if G.size == 2160:
            for g in mats:
                print("  gen:")
                for row in g:
                    print("    ", [repr(x) for x in row])
