"""Dev: wide search for the G27 graph interpretation."""

import sys, time
from itertools import permutations, product

sys.path.insert(0, "src")

from cyclohecke.scalars import Cyc, gauss_sum, zeta
from cyclohecke.groups import ReflectionGroup
from cyclohecke.matrices import mat, mat_mul, mat_eq, identity

r5 = gauss_sum(5).promote(15)
z3 = zeta(3).promote(15)
half = Cyc.rational(1) / 2

X = Cyc.rational(1)
Y = Cyc.rational(-1)

c_variants = {}
for zname, zz in (("z3", z3), ("z3^2", z3 * z3)):
    for sgn in (1, -1):
        tag = f"1{'+' if sgn > 0 else '-'}sqrt5"
        c_variants[f"1+{zname}({tag})/2"] = 1 + zz * (1 + sgn * r5) * half
        c_variants[f"(1+{zname}({tag}))/2"] = (1 + zz * (1 + sgn * r5)) * half
        c_variants[f"(1+{zname})({tag})/2"] = (1 + zz) * (1 + sgn * r5) * half

nodes = ["12", "23", "13"]

S, T, U = 0, 1, 2
P1_RELS = [
    ([T, S, T], [S, T, S]),
    ([U, S, U], [S, U, S]),
    ([U, T, U, T], [T, U, T, U]),
    ([U, T, U] + [S, T, U] * 3, [T, U, S] * 3 + [T, U, T]),
]


def build(cval, first, transpose, s1, s2):
    edges = [
        ("12", "23", -cval * s1),
        ("12", "13", Cyc.rational(-2)),
        ("23", "12", s2 * X * Y / cval),
        ("23", "13", -Y),
        ("13", "12", X * Y),
        ("13", "23", X),
    ]
    gam = {}
    for nd in nodes:
        ingroup = set(int(ch) - 1 for ch in nd)
        gam[nd] = [
            (0 if g in ingroup else 1) if first else (1 if g in ingroup else 0)
            for g in range(3)
        ]
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


hits = []
for cname, cval in c_variants.items():
    if cval.is_zero():
        continue
    for first, tr, s1, s2 in product((True, False), (False, True), (1, -1), (1, -1)):
        base = build(cval, first, tr, s1, s2)
        for perm in permutations(range(3)):
            mats = [base[perm[g]] for g in range(3)]
            if relations_hold(mats):
                hits.append((cname, first, tr, s1, s2, perm, mats))
                print(f"HIT: c={cname} first={first} tr={tr} signs=({s1},{s2}) perm={perm}")

print(f"{len(hits)} hits")
if hits:
    cname, first, tr, s1, s2, perm, mats = hits[0]
    t0 = time.time()
    G = ReflectionGroup("G27?", mats, degrees=(6, 12, 30), conductor=15)
    cx = G.coxeter_element()
    print(
        f"|W|={G.size} refl={len(G.reflections)} classes={len(G.conjugacy_classes)} "
        f"center={len(G.center)} coxorder={G.element_order(cx)} ({time.time()-t0:.1f}s)"
    )
