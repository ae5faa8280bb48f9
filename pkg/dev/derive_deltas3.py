"""Dev: rotation (delta-twist) orbits inside Hurwitz orbits.

The chain sigma_1 sigma_2 ... sigma_{n-1} sends (b_1, ..., b_n) to
(b_2, ..., b_n, delta^-1 b_1 delta); it preserves the braid-level
presentation type.  Checking how rotation orbits sit inside the
relation-matching buckets tells which buckets are braid-honest.
"""

import sys
from collections import Counter
from itertools import permutations

sys.path.insert(0, "src")

from cyclohecke.scalars import Cyc, gauss_sum, zeta
from cyclohecke.groups import ReflectionGroup
from cyclohecke.braids import Presentation, hurwitz_orbit, hurwitz_move


def rotation(group, tup):
    out = tup
    for i in range(len(tup) - 1):
        out = hurwitz_move(group, out, i)
    return out


def rotation_orbits(group, orbit):
    seen = set()
    orbits = []
    for tup in sorted(orbit):
        if tup in seen:
            continue
        cur = tup
        orb = []
        while cur not in seen:
            seen.add(cur)
            orb.append(cur)
            cur = rotation(group, cur)
        orbits.append(orb)
    return orbits


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
rots = rotation_orbits(G443, orbit)
print("G443 rotation orbit sizes:", sorted(len(o) for o in rots))


def bucket(group, tup, candidates):
    hits = []
    n = len(tup)
    for p in candidates:
        ok = False
        for perm in permutations(range(n)):
            images = tuple(tup[perm[j]] for j in range(n))
            if p.relations_hold(group, images):
                ok = True
                break
        if ok:
            hits.append(p.name)
    return tuple(hits)


for orb in rots:
    buckets = Counter(bucket(G443, t, P443) for t in orb)
    contains_seed = tuple(G443.generator_indices) in orb
    print(f"  rotation orbit size {len(orb)} buckets {dict(buckets)} seed={contains_seed}")
