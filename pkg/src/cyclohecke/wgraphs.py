"""
Generalized W-graphs: admissible pre-graphs, pre-representations, and the
search for genuine Hecke-algebra models.

A node of a pre-graph assigns to every generator a parameter index below the
generator's order.  Admissibility is checked against the canonical node data
of every proper standard-parabolic subgroup: the multiset of restricted nodes
must equal the union (with multiplicities) of the chosen node data of the
restricted character's constituents.

Two node-string notations are decoded: the dot-grouped form for order-3
two-generator groups ("1..2" puts generator 1 at parameter 0 and generator 2
at parameter 2), and the subset form for groups whose generators are all
conjugate of order 2 ("13" lists the generators sitting at the first
parameter; the rest sit at the second).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .groups import GroupRepresentation, ReflectionGroup
from .heckealg import HeckeRep
from .rings import LaurentPoly, ParameterRing, RationalFn
from .scalars import Cyc, zeta

__all__ = [
    "parse_node",
    "node_string",
    "eigen_index_multiset",
    "pair_constraint",
    "enumerate_admissible",
    "PreRepresentation",
    "build_pre_representation",
    "decode_graph",
    "encode_graph",
    "solve_wgraph",
    "WGraphSolution",
]


# -- node notation ------------------------------------------------------------


def parse_node(text: str, ngens: int, max_order: int) -> tuple[int, ...]:
    """Decode a catalog node string into a gamma-vector."""
    if max_order == 2:
        # subset form: listed generators take parameter 0, others parameter 1
        listed = {int(ch) for ch in text}
        return tuple(0 if (j + 1) in listed else 1 for j in range(ngens))
    groups = text.split(".")
    if len(groups) != max_order:
        raise ValueError(f"node {text!r} does not have {max_order} dot-groups")
    gamma = [None] * ngens
    for value, grp in enumerate(groups):
        for ch in grp:
            gamma[int(ch) - 1] = value
    if any(g is None for g in gamma):
        raise ValueError(f"node {text!r} misses a generator")
    return tuple(gamma)


def node_string(gamma: tuple[int, ...], max_order: int) -> str:
    if max_order == 2:
        return "".join(str(j + 1) for j, v in enumerate(gamma) if v == 0)
    groups = ["" for _ in range(max_order)]
    for j, v in enumerate(gamma):
        groups[v] += str(j + 1)
    return ".".join(groups)


# -- admissibility -------------------------------------------------------------


def eigen_index_multiset(group: ReflectionGroup, chi, gen_index: int, order: int) -> Counter:
    """Multiset of parameter indices m with eigenvalue zeta_order^m of the
    image of the generator in any representation affording chi."""
    # power sums of the eigenvalues from character values on powers
    dim = int(chi[group.class_of[0]].as_rational())
    powers = []
    e = group.generator_indices[gen_index]
    rp = group.right_perm(e)
    cur = 0
    for _ in range(order - 1):
        cur = rp[cur]
        powers.append(chi[group.class_of[cur]])
    # solve for multiplicities n_m of zeta^m: sum_m n_m zeta^(k m) = p_k
    z = zeta(order)
    counts = {}
    for m in range(order):
        # n_m = (dim + sum_k p_k zeta^(-k m)) / order, by orthogonality
        acc = Cyc.rational(dim)
        for k in range(1, order):
            acc = acc + powers[k - 1] * (z ** ((-k * m) % order))
        acc = acc * Fraction(1, order)
        if not acc.is_rational():
            raise ValueError("eigenvalue multiplicities not rational")
        n = acc.as_rational()
        if n.denominator != 1 or n < 0:
            raise ValueError("bad eigenvalue multiplicity")
        if n:
            counts[m] = int(n)
    out = Counter(counts)
    assert sum(out.values()) == dim
    return out


def restriction_subgroup(group: ReflectionGroup, gen_subset) -> ReflectionGroup:
    mats = [group.generators[j] for j in gen_subset]
    return ReflectionGroup(
        f"{group.name}|{gen_subset}", mats, degrees=None, conductor=group.conductor
    )


def pair_constraint(group: ReflectionGroup, chi, pair, orders) -> Counter:
    """
    Canonical multiset of (gamma_a, gamma_b) node pairs for the restriction
    of chi to the parabolic generated by the two order-2 generators in pair.

    Linear constituents contribute their forced nodes; two-dimensional
    constituents contribute {(0,1), (1,0)}, the node data whose solutions
    deform them.
    """
    a, b = pair
    assert orders[a] == 2 and orders[b] == 2
    sub = restriction_subgroup(group, (a, b))
    # character of chi restricted to sub, on sub's classes
    res = []
    for r in sub.class_reps:
        gi = group.element_index(sub.elements[r])
        res.append(chi[group.class_of[gi]])
    res = tuple(res)
    out: Counter = Counter()
    for psi in sub.character_table:
        mult = sub.inner_product(res, psi)
        if not mult:
            continue
        dim = int(psi[sub.class_of[0]].as_rational())
        if dim == 1:
            ga = 0 if psi[sub.class_of[sub.generator_indices[0]]] == 1 else 1
            gb = 0 if psi[sub.class_of[sub.generator_indices[1]]] == 1 else 1
            out[(ga, gb)] += int(mult)
        elif dim == 2:
            out[(0, 1)] += int(mult)
            out[(1, 0)] += int(mult)
        else:
            raise ValueError("rank-2 parabolic with constituent above dim 2")
    return out


def enumerate_admissible(group: ReflectionGroup, chi, orders) -> list[tuple]:
    """
    All admissible pre-graph node multisets for the character chi, as sorted
    tuples of gamma-vectors.  Constraints: per-generator eigenvalue marginals
    and, when every generator has order 2, all two-generator parabolic pair
    marginals.
    """
    ngens = len(group.generators)
    dim = int(chi[group.class_of[0]].as_rational())
    marginals = [eigen_index_multiset(group, chi, j, orders[j]) for j in range(ngens)]
    pairs = {}
    if all(o == 2 for o in orders):
        for a in range(ngens):
            for b in range(a + 1, ngens):
                pairs[(a, b)] = pair_constraint(group, chi, (a, b), orders)

    values = list(itertools.product(*[range(orders[j]) for j in range(ngens)]))
    results = []

    def feasible(counts_m, counts_p):
        return all(v >= 0 for v in counts_m.values()) and all(
            v >= 0 for c in counts_p.values() for v in c.values()
        )

    def rec(start, remaining, counts_m, counts_p, chosen):
        if remaining == 0:
            if all(v == 0 for c in counts_m for v in c.values()) and all(
                v == 0 for c in counts_p.values() for v in c.values()
            ):
                results.append(tuple(chosen))
            return
        for vi in range(start, len(values)):
            node = values[vi]
            ok = True
            for j in range(ngens):
                if counts_m[j][node[j]] <= 0:
                    ok = False
                    break
            if ok:
                for (a, b), c in counts_p.items():
                    if c[(node[a], node[b])] <= 0:
                        ok = False
                        break
            if not ok:
                continue
            for j in range(ngens):
                counts_m[j][node[j]] -= 1
            for (a, b), c in counts_p.items():
                c[(node[a], node[b])] -= 1
            chosen.append(node)
            rec(vi, remaining - 1, counts_m, counts_p, chosen)
            chosen.pop()
            for j in range(ngens):
                counts_m[j][node[j]] += 1
            for (a, b), c in counts_p.items():
                c[(node[a], node[b])] += 1

    counts_m = [Counter(m) for m in marginals]
    counts_p = {k: Counter(v) for k, v in pairs.items()}
    rec(0, dim, counts_m, counts_p, [])
    return results


# -- pre-representations -------------------------------------------------------


@dataclass
class PreRepresentation:
    """Matrices whose entries are parameters, zeros, or shared unknowns."""

    nodes: tuple
    orders: tuple
    generator_class: tuple          # conjugacy class id per generator
    param_names: tuple              # per class: tuple of parameter names
    orderings: tuple                # per generator: permutation rank of values
    entries: tuple                  # per generator: matrix of ('p', name) | 0 | ('u', id)
    unknowns: list

    @property
    def dimension(self):
        return len(self.nodes)

    @property
    def ngens(self):
        return len(self.entries)


def build_pre_representation(nodes, orders, generator_class, param_names, orderings=None):
    """
    Diagonal rule: entry (k,k) of T_j is the parameter of index gamma_k(j).
    Zero rule: entry (k,l) vanishes unless diag k < diag l in the chosen
    per-generator ordering.  Remaining entries are unknowns, shared between
    conjugate generators whenever both diagonal values agree.
    """
    ngens = len(orders)
    r = len(nodes)
    if orderings is None:
        orderings = tuple(tuple(range(orders[j])) for j in range(ngens))
    # orderings[j] lists parameter indices from largest to smallest
    rank = []
    for j in range(ngens):
        pos = {v: i for i, v in enumerate(orderings[j])}
        rank.append(pos)
    unknowns = []
    unk_ids = {}
    entries = []
    for j in range(ngens):
        mat = []
        for k in range(r):
            row = []
            for l in range(r):
                if k == l:
                    row.append(("p", param_names[generator_class[j]][nodes[k][j]]))
                    continue
                gk, gl = nodes[k][j], nodes[l][j]
                # strictly smaller diagonal first: larger rank means smaller
                if gk == gl or rank[j][gk] < rank[j][gl]:
                    row.append(0)
                    continue
                key = (generator_class[j], k, l, gk, gl)
                if key not in unk_ids:
                    unk_ids[key] = len(unknowns)
                    unknowns.append(key)
                row.append(("u", unk_ids[key]))
            mat.append(tuple(row))
        entries.append(tuple(mat))
    return PreRepresentation(
        tuple(nodes), tuple(orders), tuple(generator_class), tuple(param_names),
        tuple(tuple(o) for o in orderings), tuple(entries), unknowns,
    )


# -- order-2 graph codec --------------------------------------------------------


def decode_graph(node_labels, edges, ring: ParameterRing, presentation, ngens,
                 x: str = "x", y: str = "y", label: str | None = None) -> HeckeRep:
    """
    Order-2 graph to matrices.  Node labels list the generators carrying the
    first parameter; a directed edge (a, b, value) fills T_j[a][b] = value for
    every generator j with gamma_a(j) = 1 and gamma_b(j) = 0.
    """
    gammas = [
        tuple(0 if (j + 1) in {int(c) for c in lab} else 1 for j in range(ngens))
        for lab in node_labels
    ]
    r = len(gammas)
    px, py = ring.var(x), ring.var(y)
    mats = []
    for j in range(ngens):
        m = [[ring.zero() for _ in range(r)] for _ in range(r)]
        for k in range(r):
            m[k][k] = px if gammas[k][j] == 0 else py
        for (a, b, value) in edges:
            if gammas[a][j] == 1 and gammas[b][j] == 0:
                m[a][b] = value
        mats.append(tuple(tuple(row) for row in m))
    evs = tuple((px, py) for _ in range(ngens))
    return HeckeRep(presentation, ring, tuple(mats), evs, label=label)


def encode_graph(rep: HeckeRep, x: str = "x", y: str = "y"):
    """Inverse of decode_graph for order-2 models in graph shape."""
    ring = rep.ring
    px, py = ring.var(x), ring.var(y)
    r = rep.dimension
    ngens = len(rep.matrices)
    gammas = []
    for k in range(r):
        gamma = []
        for j in range(ngens):
            d = rep.matrices[j][k][k]
            if (d - px).is_zero():
                gamma.append(0)
            elif (d - py).is_zero():
                gamma.append(1)
            else:
                raise ValueError("diagonal entry is not a bare parameter")
        gammas.append(tuple(gamma))
    labels = [
        "".join(str(j + 1) for j in range(ngens) if g[j] == 0) for g in gammas
    ]
    edges = {}
    for j in range(ngens):
        for a in range(r):
            for b in range(r):
                if a == b:
                    continue
                v = rep.matrices[j][a][b]
                if v.is_zero():
                    continue
                if not (gammas[a][j] == 1 and gammas[b][j] == 0):
                    raise ValueError("nonzero entry violates the zero rule")
                prev = edges.get((a, b))
                if prev is not None and not (prev - v).is_zero():
                    raise ValueError("edge value differs between generators")
                edges[(a, b)] = v
    return labels, sorted(edges.items())


# -- solving pre-representations -------------------------------------------------


class UPoly:
    """Polynomial in the unknowns with rational-function coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms):
        self.n = n
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    @staticmethod
    def const(n, c):
        return UPoly(n, {(0,) * n: c})

    @staticmethod
    def unknown(n, i, one):
        e = [0] * n
        e[i] = 1
        return UPoly(n, {tuple(e): one})

    def is_zero(self):
        return not self.terms

    def __add__(self, o):
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            out[e] = c if s is None else s + c
        return UPoly(self.n, out)

    def __neg__(self):
        return UPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, o):
        return self + (-o)

    def __mul__(self, o):
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                out[e] = c if s is None else s + c
        return UPoly(self.n, out)

    def scale(self, c):
        return UPoly(self.n, {e: c * v for e, v in self.terms.items()})

    def lead(self):
        e = max(self.terms)
        return e, self.terms[e]

    def degree_in(self, i):
        return max((e[i] for e in self.terms), default=0)

    def substitute(self, i, value: "UPoly"):
        out = UPoly(self.n, {})
        for e, c in self.terms.items():
            term = UPoly(self.n, {e[:i] + (0,) + e[i + 1 :]: c})
            for _ in range(e[i]):
                term = term * value
            out = out + term
        return out

    def evaluate(self, values):
        acc = None
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                for _ in range(k):
                    v = v * values[i]
            acc = v if acc is None else acc + v
        return acc


@dataclass
class WGraphSolution:
    assignment: list            # unknown id -> RationalFn value
    irreducible: bool
    rep: HeckeRep


def _spoly(f, g):
    ef, cf = f.lead()
    eg, cg = g.lead()
    lcm = tuple(max(a, b) for a, b in zip(ef, eg))
    mf = UPoly(f.n, {tuple(l - a for l, a in zip(lcm, ef)): cg})
    mg = UPoly(g.n, {tuple(l - a for l, a in zip(lcm, eg)): cf})
    return f * mf - g * mg


def _reduce(f, basis):
    changed = True
    while changed and not f.is_zero():
        changed = False
        ef, cf = f.lead()
        for g in basis:
            eg, cg = g.lead()
            if all(a >= b for a, b in zip(ef, eg)):
                mono = UPoly(f.n, {tuple(a - b for a, b in zip(ef, eg)): cf / cg})
                f = f - g * mono
                changed = True
                break
    return f


def groebner(polys, budget=4000):
    basis = [p for p in polys if not p.is_zero()]
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    steps = 0
    while pairs:
        steps += 1
        if steps > budget:
            raise RuntimeError("elimination budget exceeded")
        i, j = pairs.pop()
        s = _reduce(_spoly(basis[i], basis[j]), basis)
        if not s.is_zero():
            basis.append(s)
            pairs += [(len(basis) - 1, k) for k in range(len(basis) - 1)]
    # interreduce for stability
    out = []
    for i, g in enumerate(basis):
        r = _reduce(g, out + basis[i + 1 :])
        if not r.is_zero():
            out.append(r)
    return out


def solve_wgraph(prerep: PreRepresentation, presentation, ring: ParameterRing,
                 group: ReflectionGroup, target_chi, standard_assignment,
                 budget: int = 4000):
    """
    Solve the defining relations for the unknowns of a pre-representation.

    Returns (solutions, status); status is 'ok' or 'budget'.  Solutions are
    normalized by the diagonal rescaling gauge (a spanning forest of unknown
    positions is pinned to 1, with zero branches explored separately) and
    tagged irreducible via the character of the specialized representation.
    """
    nunk = len(prerep.unknowns)
    one = RationalFn.from_poly(ring.one())

    def entry_to_upoly(cell):
        if cell == 0:
            return UPoly(nunk, {})
        kind, data = cell
        if kind == "p":
            return UPoly.const(nunk, RationalFn.from_poly(ring.var(data)))
        return UPoly.unknown(nunk, data, one)

    mats = []
    for j in range(prerep.ngens):
        mats.append(
            [
                [entry_to_upoly(prerep.entries[j][k][l]) for l in range(prerep.dimension)]
                for k in range(prerep.dimension)
            ]
        )

    def mat_mul_u(a, b):
        n = len(a)
        out = [[UPoly(nunk, {}) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for k in range(n):
                if a[i][k].is_zero():
                    continue
                for j2 in range(n):
                    if not b[k][j2].is_zero():
                        out[i][j2] = out[i][j2] + a[i][k] * b[k][j2]
        return out

    equations = []
    for lhs, rhs in presentation.relations:
        la = None
        for g in lhs:
            la = mats[g] if la is None else mat_mul_u(la, mats[g])
        rb = None
        for g in rhs:
            rb = mats[g] if rb is None else mat_mul_u(rb, mats[g])
        for k in range(prerep.dimension):
            for l in range(prerep.dimension):
                eq = la[k][l] - rb[k][l]
                if not eq.is_zero():
                    equations.append(eq)

    # gauge: spanning forest over node indices with unknown positions as edges
    parent = list(range(prerep.dimension))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    gauge = []
    for uid, key in enumerate(prerep.unknowns):
        _, k, l, _, _ = key
        ra, rb2 = find(k), find(l)
        if ra != rb2:
            parent[ra] = rb2
            gauge.append(uid)

    solutions = []
    seen_points = set()
    status = "ok"

    def finish(assign_map):
        # instantiate remaining free unknowns with 1 (documented convention)
        values = []
        for uid in range(nunk):
            v = assign_map.get(uid)
            values.append(v if v is not None else one)
        # verify by direct evaluation
        for eq in equations:
            val = eq.evaluate(values)
            if val is not None and not val.is_zero():
                return
        key = tuple(v.num.key() + v.den.key() for v in values)
        if key in seen_points:
            return
        seen_points.add(key)
        rep = _instantiate(prerep, presentation, ring, values)
        if not rep.check().ok:
            return
        spec = rep.specialize(standard_assignment)
        chi = group.character_of_matrices(spec)
        try:
            norm = group.inner_product(chi, chi)
            irr = norm == 1
        except ValueError:
            irr = False
        solutions.append(WGraphSolution(values, irr, rep))

    def solve_branch(eqs, assign_map, todo_gauge):
        nonlocal status
        # split on gauge unknowns: pin to 1, or explore the zero branch
        if todo_gauge:
            uid = todo_gauge[0]
            for pin in (one, RationalFn.from_poly(ring.zero())):
                new_eqs = [e.substitute(uid, UPoly.const(nunk, pin)) for e in eqs]
                new_map = dict(assign_map)
                new_map[uid] = pin
                solve_branch([e for e in new_eqs if not e.is_zero()], new_map, todo_gauge[1:])
            return
        # propagate linear equations
        eqs = [e for e in eqs if not e.is_zero()]
        progress = True
        while progress:
            progress = False
            for e in eqs:
                if any(ex.count(1) == 1 and sum(ex) == 1 for ex in e.terms):
                    # linear in some unknown?
                    for i in range(nunk):
                        if e.degree_in(i) == 1 and all(
                            ex[i] == 0 or sum(ex) == ex[i] for ex in e.terms
                        ):
                            # e = a * x_i + b with a, b free of x_i
                            a = UPoly(nunk, {})
                            b = UPoly(nunk, {})
                            for ex, c in e.terms.items():
                                if ex[i] == 1:
                                    a = a + UPoly(nunk, {ex[:i] + (0,) + ex[i + 1 :]: c})
                                elif ex[i] == 0:
                                    b = b + UPoly(nunk, {ex: c})
                                else:
                                    a = None
                                    break
                            if a is None or len(a.terms) != 1 or max(a.terms) != (0,) * nunk:
                                continue
                            coeff = a.terms[(0,) * nunk]
                            val_poly = (-b).scale(one / coeff)
                            if any(sum(e2) > 0 for e2 in val_poly.terms):
                                continue  # depends on other unknowns; skip
                            value = val_poly.terms.get((0,) * nunk, RationalFn.from_poly(ring.zero()))
                            assign_map = dict(assign_map)
                            assign_map[i] = value
                            eqs = [
                                q.substitute(i, UPoly.const(nunk, value)) for q in eqs
                            ]
                            eqs = [q for q in eqs if not q.is_zero()]
                            progress = True
                            break
                if progress:
                    break
        if not eqs:
            finish(assign_map)
            return
        try:
            gb = groebner(eqs, budget=budget)
        except RuntimeError:
            status = "budget"
            return
        if any(len(g.terms) == 1 and max(g.terms) == (0,) * nunk for g in gb):
            return  # inconsistent: no solutions on this branch
        # try to read the basis as a back-substitutable triangular system
        remaining = sorted(
            {i for g in gb for e in g.terms for i in range(nunk) if e[i] > 0},
            reverse=True,
        )
        if not remaining:
            finish(assign_map)
            return
        # univariate elements of the basis in the last unknown
        i = remaining[0]
        unis = [g for g in gb if all(all(e[j] == 0 for j in range(nunk) if j != i) for e in g.terms)]
        if not unis:
            status = "budget"
            return
        g = min(unis, key=lambda q: q.degree_in(i))
        deg = g.degree_in(i)
        coeffs = [RationalFn.from_poly(ring.zero()) for _ in range(deg + 1)]
        for e, c in g.terms.items():
            coeffs[e[i]] = c
        roots = _field_roots(coeffs, ring)
        if roots is None:
            status = "budget"
            return
        for root in roots:
            new_eqs = [q.substitute(i, UPoly.const(nunk, root)) for q in gb]
            new_map = dict(assign_map)
            new_map[i] = root
            solve_branch([q for q in new_eqs if not q.is_zero()], new_map, ())

    solve_branch(equations, {}, tuple(gauge))
    return solutions, status


def _field_roots(coeffs, ring):
    """Roots of a low-degree polynomial over the rational-function field."""
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    deg = len(coeffs) - 1
    zero = RationalFn.from_poly(ring.zero())
    if deg <= 0:
        return []
    roots = []
    if coeffs[0].is_zero():
        roots.append(zero)
        shifted = coeffs[1:]
        rest = _field_roots(shifted, ring)
        return None if rest is None else roots + rest
    if deg == 1:
        return roots + [-(coeffs[0] / coeffs[1])]
    if deg == 2:
        a, b, c = coeffs[2], coeffs[1], coeffs[0]
        disc = b * b - 4 * a * c
        sq = _rational_sqrt(disc, ring)
        if sq is None:
            return roots  # irrational roots: not representable without adjunction
        half = RationalFn.from_poly(ring.scalar(Fraction(1, 2)))
        inva = a.inverse()
        return roots + [(-b + sq) * half * inva, (-b - sq) * half * inva]
    return None


def _rational_sqrt(rf: RationalFn, ring):
    """A square root inside the field, if one exists with square-free check."""
    if rf.is_zero():
        return RationalFn.from_poly(ring.zero())

    def poly_sqrt(p: LaurentPoly):
        # try exact square root by matching the candidate square
        if p.is_zero():
            return ring.zero()
        lead_e, lead_c = p.leading()
        if any(x % 2 for x in lead_e):
            return None
        csqrt = _scalar_sqrt(lead_c)
        if csqrt is None:
            return None
        half_e = tuple(x // 2 for x in lead_e)
        cand = LaurentPoly(ring, {half_e: csqrt})
        rem = p - cand * cand
        # Newton-like completion for small supports
        for _ in range(64):
            if rem.is_zero():
                return cand
            re, rc = rem.leading()
            de = tuple(a - b for a, b in zip(re, half_e))
            corr = LaurentPoly(ring, {de: rc * (csqrt * 2).inverse()})
            if corr.is_zero():
                return None
            cand = cand + corr
            rem = p - cand * cand
        return None

    num = poly_sqrt(rf.num)
    den = poly_sqrt(rf.den)
    if num is None or den is None:
        return None
    return RationalFn(num, den)


def _scalar_sqrt(c: Cyc):
    """Square root of a rational scalar when it is a perfect square in Q."""
    if not c.is_rational():
        return None
    q = c.as_rational()
    if q < 0:
        return None
    import math

    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Cyc.rational(Fraction(rn, rd))
    return None


def _instantiate(prerep: PreRepresentation, presentation, ring, values) -> HeckeRep:
    mats = []
    for j in range(prerep.ngens):
        m = []
        for k in range(prerep.dimension):
            row = []
            for l in range(prerep.dimension):
                cell = prerep.entries[j][k][l]
                if cell == 0:
                    row.append(ring.zero())
                elif cell[0] == "p":
                    row.append(ring.var(cell[1]))
                else:
                    v = values[cell[1]]
                    row.append(v if isinstance(v, RationalFn) else RationalFn.from_poly(v))
            m.append(tuple(row))
        mats.append(tuple(m))
    evs = []
    for j in range(prerep.ngens):
        names = prerep.param_names[prerep.generator_class[j]]
        evs.append(tuple(ring.var(nm) for nm in names))
    return HeckeRep(presentation, ring, tuple(mats), tuple(evs))
