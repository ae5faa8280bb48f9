"""
Finite complex reflection groups as explicit matrix groups.

A group is enumerated once by breadth-first closure of its generator matrices;
after that all structural work (lengths, minimal-word DAGs, conjugacy classes,
character tables, fake degrees) happens on integer indices.  Characters are
produced by a tensor mill: starting from the reflection character and the
determinant, products and exterior/symmetric squares are reduced against the
known irreducibles until the sum of squares reaches the group order.

The mill plus fake-degree valuations pins the phi_{d,b} labelling used for
representations: d is the dimension, b the valuation of the fake degree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .matrices import (
    identity,
    kron,
    mat,
    mat_charpoly_reverse,
    mat_det,
    mat_eq,
    mat_inverse,
    mat_key,
    mat_mul,
    mat_rank,
    mat_scale,
    mat_sub,
    mat_trace,
)
from .scalars import Cyc, Rat

__all__ = ["ReflectionGroup", "GroupRepresentation", "poincare_coefficients"]

ENUMERATION_CAP = 50000


class ReflectionGroup:
    """A finite matrix group generated by (pseudo-)reflections."""

    def __init__(self, name: str, generators, degrees=None, conductor: int = 1,
                 delta_order=None, cap: int = ENUMERATION_CAP):
        self.name = name
        self.generators = tuple(mat(g) for g in generators)
        self.rank = len(self.generators[0])
        self.conductor = conductor
        self.degrees = tuple(degrees) if degrees else None
        self.delta_order = tuple(delta_order) if delta_order else tuple(range(len(self.generators)))
        self._enumerate(cap)

    # -- enumeration ----------------------------------------------------

    def _enumerate(self, cap: int):
        e = identity(self.rank)
        elements = [e]
        index = {mat_key(e): 0}
        parent = [(-1, -1)]  # (previous element, generator) realizing w = prev * gen
        frontier = [0]
        right = [[None] * len(self.generators) for _ in range(1)]
        while frontier:
            nxt = []
            for i in frontier:
                for g, gen in enumerate(self.generators):
                    prod = mat_mul(elements[i], gen)
                    key = mat_key(prod)
                    j = index.get(key)
                    if j is None:
                        j = len(elements)
                        if j >= cap:
                            raise RuntimeError(
                                f"group {self.name} exceeded enumeration cap {cap}"
                            )
                        elements.append(prod)
                        index[key] = j
                        parent.append((i, g))
                        right.append([None] * len(self.generators))
                        nxt.append(j)
                    right[i][g] = j
            frontier = nxt
        self.elements = elements
        self.index = index
        self.parent = parent
        self.size = len(elements)
        self.right = right  # right[i][g] = index(elements[i] * gen_g)

    def element_index(self, matrix) -> int:
        key = mat_key(mat(matrix))
        if key not in self.index:
            raise KeyError(f"matrix not in group {self.name}")
        return self.index[key]

    def word_of(self, i: int) -> tuple[int, ...]:
        """A shortest word (in enumeration generators) for element i."""
        out = []
        while i != 0:
            i, g = self.parent[i]
            out.append(g)
        return tuple(reversed(out))

    def multiply_word(self, word, start: int = 0) -> int:
        i = start
        for g in word:
            i = self.right[i][g]
        return i

    # -- integer tables ----------------------------------------------------
    #
    # The full |W| x |W| multiplication table is never materialized; products
    # are taken through cached translation permutations instead.

    def right_perm(self, a: int) -> list[int]:
        """Permutation i -> i * a."""
        cached = self._right_perms.get(a)
        if cached is not None:
            return cached
        col = list(range(self.size))
        right = self.right
        for g in self.word_of(a):
            col = [right[i][g] for i in col]
        self._right_perms[a] = col
        return col

    def left_perm(self, a: int) -> list[int]:
        """Permutation i -> a * i, via dynamic programming over the BFS tree."""
        cached = self._left_perms.get(a)
        if cached is not None:
            return cached
        out = [0] * self.size
        out[0] = a
        right = self.right
        for i in range(1, self.size):
            j, g = self.parent[i]
            out[i] = right[out[j]][g]
        self._left_perms[a] = out
        return out

    def mul(self, a: int, b: int) -> int:
        return self.right_perm(b)[a]

    @cached_property
    def _right_perms(self) -> dict:
        return {}

    @cached_property
    def _left_perms(self) -> dict:
        return {}

    @cached_property
    def generator_indices(self) -> list[int]:
        return [self.index[mat_key(g)] for g in self.generators]

    @cached_property
    def inverse(self) -> list[int]:
        # i = j * g  =>  i^-1 = g^-1 * j^-1, walking up the BFS tree
        inv = [0] * self.size
        gen_inv_left = []
        for gi in self.generator_indices:
            # generator inverse by repeated right multiplication
            j, k = 0, gi
            while k != 0:
                j = k
                k = self.right_perm(gi)[k]
            # j = gi^(order-1) = gi^-1
            gen_inv_left.append(self.left_perm(j))
        for i in range(1, self.size):
            j, g = self.parent[i]
            inv[i] = gen_inv_left[g][inv[j]]
        return inv

    def conjugate(self, a: int, b: int) -> int:
        """b^-1 * a * b."""
        return self.right_perm(b)[self.left_perm(self.inverse[b])[a]]

    @cached_property
    def conjugacy_classes(self) -> list[list[int]]:
        gen_conj = []
        for gi in self.generator_indices:
            rp = self.right_perm(gi)
            lp = self.left_perm(self.inverse[gi])
            gen_conj.append([rp[lp[a]] for a in range(self.size)])
        seen = [False] * self.size
        classes = []
        for i in range(self.size):
            if seen[i]:
                continue
            orbit = [i]
            seen[i] = True
            stack = [i]
            while stack:
                a = stack.pop()
                for table in gen_conj:
                    c = table[a]
                    if not seen[c]:
                        seen[c] = True
                        orbit.append(c)
                        stack.append(c)
            classes.append(sorted(orbit))
        return classes

    @cached_property
    def class_of(self) -> list[int]:
        out = [0] * self.size
        for ci, cls in enumerate(self.conjugacy_classes):
            for i in cls:
                out[i] = ci
        return out

    @cached_property
    def class_reps(self) -> list[int]:
        return [cls[0] for cls in self.conjugacy_classes]

    def power_class(self, k: int) -> list[int]:
        """Class index of rep^k for each class."""
        out = []
        for r in self.class_reps:
            rp = self.right_perm(r)
            i = 0
            for _ in range(k):
                i = rp[i]
            out.append(self.class_of[i])
        return out

    # -- reflections, center, degrees ---------------------------------------

    @cached_property
    def reflections(self) -> list[int]:
        one = identity(self.rank)
        return [
            i
            for i, m in enumerate(self.elements)
            if mat_rank(mat_sub(m, one)) == 1
        ]

    @cached_property
    def center(self) -> list[int]:
        out = []
        perms = [(self.right_perm(g), self.left_perm(g)) for g in self.generator_indices]
        for i in range(self.size):
            if all(rp[i] == lp[i] for rp, lp in perms):
                out.append(i)
        return out

    def element_order(self, i: int) -> int:
        rp = self.right_perm(i)
        n = 1
        j = i
        while j != 0:
            j = rp[j]
            n += 1
        return n

    @property
    def coxeter_number(self) -> int:
        if not self.degrees:
            raise ValueError("no degrees recorded in catalog entry")
        return max(self.degrees)

    def coxeter_element(self) -> int:
        """Image of the product of delta-ordered generators."""
        i = 0
        for g in self.delta_order:
            i = self.right[i][g]
        return i

    def hurwitz_cardinality(self) -> int:
        n = len(self.generators)
        h = self.coxeter_number
        num = 1
        for k in range(1, n + 1):
            num *= k
        num *= h**n
        if num % self.size:
            raise ValueError("n! h^n / |W| is not an integer")
        return num // self.size

    # -- lengths for arbitrary generating sets ------------------------------

    def length_table(self, gen_indices) -> list[int]:
        """BFS length of every element over the given generating set."""
        perms = [self.right_perm(g) for g in gen_indices]
        INF = -1
        dist = [INF] * self.size
        dist[0] = 0
        frontier = [0]
        d = 0
        while frontier:
            nxt = []
            for i in frontier:
                for rp in perms:
                    j = rp[i]
                    if dist[j] == INF:
                        dist[j] = d + 1
                        nxt.append(j)
            frontier = nxt
            d += 1
        if any(x == INF for x in dist):
            raise ValueError("the given set does not generate the group")
        return dist

    def predecessor_dag(self, gen_indices) -> list[list[tuple[int, int]]]:
        """For each element, the (generator, shorter element) pairs with
        shorter * gen = element and length(shorter) = length(element) - 1."""
        dist = self.length_table(gen_indices)
        preds: list[list[tuple[int, int]]] = [[] for _ in range(self.size)]
        for g in gen_indices:
            rp = self.right_perm(g)
            for i in range(self.size):
                j = rp[i]
                if dist[j] == dist[i] + 1:
                    preds[j].append((g, i))
        return preds

    def minimal_words(self, element: int, gen_indices, cap: int = 10000):
        """Yield minimal words (tuples of generator element-indices) lazily."""
        preds = self.predecessor_dag(gen_indices)
        return self._minimal_words_from(element, preds, cap)

    def _minimal_words_from(self, element, preds, cap):
        count = 0
        stack = [(element, ())]
        while stack:
            i, suffix = stack.pop()
            if i == 0:
                yield suffix
                count += 1
                if count >= cap:
                    return
                continue
            for g, p in preds[i]:
                stack.append((p, (g,) + suffix))

    # -- characters ----------------------------------------------------------

    def rep_matrix(self, matrices, i: int):
        """Image of element i under the rep sending generator g to matrices[g]."""
        out = identity(len(matrices[0]))
        for g in self.word_of(i):
            out = mat_mul(out, matrices[g])
        return out

    def character_of_matrices(self, matrices) -> tuple:
        vals = []
        for r in self.class_reps:
            vals.append(mat_trace(self.rep_matrix(matrices, r)))
        return tuple(vals)

    def inner_product(self, chi, psi) -> Fraction:
        total = Cyc.rational(0)
        for ci, cls in enumerate(self.conjugacy_classes):
            total = total + chi[ci] * psi[ci].conjugate() * len(cls)
        total = total * Fraction(1, self.size)
        if not total.is_rational():
            raise ValueError("inner product of non-characters?")
        return total.as_rational()

    @cached_property
    def reflection_character(self) -> tuple:
        return self.character_of_matrices(self.generators)

    @cached_property
    def determinant_character(self) -> tuple:
        return tuple(mat_det(self.elements[r]) for r in self.class_reps)

    def _char_mul(self, a, b):
        return tuple(x * y for x, y in zip(a, b))

    def _char_power_map(self, chi, k):
        pk = self.power_class(k)
        return tuple(chi[pk[ci]] for ci in range(len(chi)))

    def _char_exterior2(self, chi):
        chi2 = self._char_power_map(chi, 2)
        return tuple((a * a - b) * Fraction(1, 2) for a, b in zip(chi, chi2))

    def _char_symmetric2(self, chi):
        chi2 = self._char_power_map(chi, 2)
        return tuple((a * a + b) * Fraction(1, 2) for a, b in zip(chi, chi2))

    @cached_property
    def character_table(self) -> list[tuple]:
        """All irreducible characters, found by the tensor mill."""
        ncl = len(self.conjugacy_classes)
        trivial = tuple(Cyc.rational(1) for _ in range(ncl))
        known: list[tuple] = [trivial]
        seen = {trivial}

        def reduce(chi):
            # subtract known constituents; return the (virtual) remainder
            rem = list(chi)
            for irr in known:
                m = self.inner_product(tuple(rem), irr)
                if m:
                    rem = [x - irr[i] * m for i, x in enumerate(rem)]
            return tuple(rem)

        def consider(chi):
            rem = reduce(chi)
            if all(x.is_zero() for x in rem):
                return
            norm = self.inner_product(rem, rem)
            if norm == 1:
                deg = rem[self.class_of[0]]
                if deg.is_rational() and deg.as_rational() > 0:
                    if rem not in seen:
                        known.append(rem)
                        seen.add(rem)
                    return
            pending.append(rem)

        pending: list[tuple] = []
        queue = [self.reflection_character, self.determinant_character]
        target = self.size
        guard = 0
        while sum(int(ch[0].as_rational()) ** 2 for ch in known) < target:
            guard += 1
            if guard > 4000:
                raise RuntimeError(f"character mill stalled for {self.name}")
            if queue:
                chi = queue.pop(0)
                consider(chi)
                # keep feeding products of what we know
                for irr in list(known):
                    queue.append(self._char_mul(chi, irr))
                queue.append(self._char_exterior2(chi))
                queue.append(self._char_symmetric2(chi))
            elif pending:
                chi = pending.pop(0)
                consider(chi)
            else:
                raise RuntimeError(f"character mill exhausted for {self.name}")
        # canonical order: by dimension, then fake-degree valuation, then key
        table = sorted(known, key=lambda ch: (ch[0].as_rational(), self.fake_degree_valuation(ch),
                                              tuple(c.key() for c in ch)))
        return table

    # -- fake degrees ---------------------------------------------------------

    @cached_property
    def _class_det_one_minus_qw(self) -> list[list[Cyc]]:
        return [mat_charpoly_reverse(self.elements[r]) for r in self.class_reps]

    def fake_degree(self, chi) -> list[Fraction]:
        """Coefficient list of the fake degree polynomial of chi."""
        dens = self._class_det_one_minus_qw
        # sum over classes of |C| * conj(chi(C)) / det(1 - q w), then multiply
        # by prod (1 - q^{d_i}) / |W|; the result must be a polynomial.
        num = [Cyc.rational(0)]
        den = [Cyc.rational(1)]
        for ci, cls in enumerate(self.conjugacy_classes):
            c = chi[ci].conjugate() * len(cls)
            # num/den += c / dens[ci]
            num = _upoly_add(_upoly_mul(num, dens[ci]), _upoly_scale(den, c))
            den = _upoly_mul(den, dens[ci])
        total = _upoly_scale(num, Fraction(1, self.size))
        for d in self.degrees:
            factor = [Cyc.rational(1)] + [Cyc.rational(0)] * (d - 1) + [Cyc.rational(-1)]
            total = _upoly_mul(total, factor)
        quo, rem = _upoly_divmod(total, den)
        if any(not c.is_zero() for c in rem):
            raise ValueError("fake degree did not come out polynomial")
        out = []
        for c in quo:
            if not c.is_rational():
                raise ValueError("fake degree has irrational coefficients")
            out.append(c.as_rational())
        while out and out[-1] == 0:
            out.pop()
        return out

    def fake_degree_valuation(self, chi) -> int:
        fd = self.fake_degree(chi)
        for i, c in enumerate(fd):
            if c:
                return i
        raise ValueError("zero fake degree")

    @cached_property
    def labels(self) -> dict[str, tuple]:
        """phi_{d,b} -> character; primes mark fake-degree ties."""
        out: dict[str, tuple] = {}
        groups: dict[tuple, list] = {}
        for chi in self.character_table:
            d = int(chi[0].as_rational())
            b = self.fake_degree_valuation(chi)
            groups.setdefault((d, b), []).append(chi)
        for (d, b), chis in groups.items():
            for k, chi in enumerate(chis):
                out[f"phi{{{d},{b}}}" + "'" * k] = chi
        return out

    def label_of(self, chi) -> str:
        for name, known in self.labels.items():
            if known == tuple(chi):
                return name
        raise KeyError("character not in table")

    def decompose(self, chi) -> dict[str, int]:
        out = {}
        for name, irr in self.labels.items():
            m = self.inner_product(chi, irr)
            if m:
                out[name] = int(m)
        return out


# -- univariate helpers over Cyc ------------------------------------------


def _upoly_add(a, b):
    n = max(len(a), len(b))
    out = [Cyc.rational(0)] * n
    for i, c in enumerate(a):
        out[i] = out[i] + c
    for i, c in enumerate(b):
        out[i] = out[i] + c
    while len(out) > 1 and out[-1].is_zero():
        out.pop()
    return out


def _upoly_mul(a, b):
    out = [Cyc.rational(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x.is_zero():
            for j, y in enumerate(b):
                if not y.is_zero():
                    out[i + j] = out[i + j] + x * y
    while len(out) > 1 and out[-1].is_zero():
        out.pop()
    return out


def _upoly_scale(a, c):
    return [x * c for x in a]


def _upoly_divmod(a, b):
    a = list(a)
    while len(a) > 1 and a[-1].is_zero():
        a.pop()
    db = len(b) - 1
    inv = b[-1].inverse()
    q = [Cyc.rational(0)] * max(1, len(a) - db)
    for i in range(len(a) - db - 1, -1, -1):
        c = a[i + db] * inv
        q[i] = c
        if not c.is_zero():
            for j, d in enumerate(b):
                a[i + j] = a[i + j] - c * d
    rem = a[:db] if db else [Cyc.rational(0)]
    return q, rem


def poincare_coefficients(group: ReflectionGroup, gen_indices) -> list[int]:
    """Coefficient c_k = #{w : l(w) = k} over the given generating set."""
    dist = group.length_table(gen_indices)
    out = [0] * (max(dist) + 1)
    for d in dist:
        out[d] += 1
    return out


# -- representations ---------------------------------------------------------


@dataclass
class GroupRepresentation:
    """Matrices for each generator of a ReflectionGroup."""

    group: ReflectionGroup
    matrices: tuple
    label: str | None = None

    @property
    def dimension(self) -> int:
        return len(self.matrices[0])

    def character(self) -> tuple:
        return self.group.character_of_matrices(self.matrices)

    def is_irreducible(self) -> bool:
        chi = self.character()
        return self.group.inner_product(chi, chi) == 1

    def satisfies_relations(self) -> bool:
        """Generator orders and all multiplication constraints of the group."""
        g = self.group
        images = {}
        for i in range(g.size):
            images[i] = g.rep_matrix(self.matrices, i)
        for i in range(g.size):
            for gi, genmat in enumerate(self.matrices):
                j = g.right[i][gi]
                if not mat_eq(mat_mul(images[i], genmat), images[j]):
                    return False
        return True

    def checked_label(self) -> str:
        return self.group.label_of(self.character())

    # -- constructors ------------------------------------------------------

    def tensor(self, other: "GroupRepresentation") -> "GroupRepresentation":
        mats = tuple(kron(a, b) for a, b in zip(self.matrices, other.matrices))
        return GroupRepresentation(self.group, mats)

    def tensor_linear(self, linear_char_values) -> "GroupRepresentation":
        """Twist by a linear character given by its value on each generator."""
        mats = tuple(
            mat_scale(m, c) for m, c in zip(self.matrices, linear_char_values)
        )
        return GroupRepresentation(self.group, mats)

    def exterior_square(self) -> "GroupRepresentation":
        n = self.dimension
        pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
        mats = []
        for m in self.matrices:
            rows = []
            for (i, j) in pairs:
                row = []
                for (k, l) in pairs:
                    row.append(m[i][k] * m[j][l] - m[i][l] * m[j][k])
                rows.append(tuple(row))
            mats.append(tuple(rows))
        return GroupRepresentation(self.group, tuple(mats))

    def symmetric_square(self) -> "GroupRepresentation":
        n = self.dimension
        pairs = [(i, j) for i in range(n) for j in range(i, n)]
        mats = []
        for m in self.matrices:
            rows = []
            for (i, j) in pairs:
                row = []
                for (k, l) in pairs:
                    v = m[i][k] * m[j][l] + m[i][l] * m[j][k]
                    if k == l:
                        v = v * Fraction(1, 2)
                    row.append(v)
                rows.append(tuple(row))
            mats.append(tuple(rows))
        return GroupRepresentation(self.group, tuple(mats))

    def isotypic_projector(self, chi) -> tuple:
        """P = (chi(1)/|W|) sum_g conj(chi(g)) rho(g), via class sums."""
        g = self.group
        n = self.dimension
        acc = [[Cyc.rational(0)] * n for _ in range(n)]
        for ci, cls in enumerate(g.conjugacy_classes):
            coeff = chi[ci].conjugate()
            if coeff.is_zero():
                continue
            csum = [[Cyc.rational(0)] * n for _ in range(n)]
            for i in cls:
                m = g.rep_matrix(self.matrices, i)
                for r in range(n):
                    row = m[r]
                    crow = csum[r]
                    for c in range(n):
                        crow[c] = crow[c] + row[c]
            for r in range(n):
                for c in range(n):
                    acc[r][c] = acc[r][c] + coeff * csum[r][c]
        dim = chi[g.class_of[0]]
        scale = dim * Fraction(1, g.size)
        return tuple(tuple(scale * x for x in row) for row in acc)

    def project_component(self, chi) -> "GroupRepresentation":
        """Restrict to the image of the isotypic projector of chi.

        Requires multiplicity exactly one, so the image carries chi."""
        g = self.group
        mult = g.inner_product(self.character(), chi)
        if mult != 1:
            raise ValueError(f"multiplicity is {mult}, not 1")
        proj = self.isotypic_projector(chi)
        basis = _column_space_basis(proj)
        dim = int(chi[g.class_of[0]].as_rational())
        assert len(basis) == dim, "projector rank differs from chi(1)"
        # solve rho(g) * basis = basis * block for each generator
        mats = []
        for m in self.matrices:
            mb = mat_mul(m, _cols_to_matrix(basis))
            block = _solve_in_basis(basis, mb)
            mats.append(block)
        return GroupRepresentation(self.group, tuple(mats))


def _column_space_basis(m):
    from .matrices import _elim

    cols = list(zip(*m))
    rows, pivots = _elim([list(c) for c in cols])
    # pivot rows of the transposed echelon span the column space
    return [tuple(rows[i]) for i in range(len(pivots))]


def _cols_to_matrix(basis):
    return tuple(zip(*basis))


def _solve_in_basis(basis, target):
    """Solve B * X = target where B has the basis vectors as columns."""
    from .matrices import _elim

    b = _cols_to_matrix(basis)
    n = len(b)
    k = len(basis)
    m = len(target[0])
    aug = [list(b[i]) + list(target[i]) for i in range(n)]
    rows, pivots = _elim(aug, reduce_fully=True)
    assert pivots == list(range(k)), "basis columns not independent"
    for r in range(k, n):
        assert all(x.is_zero() for x in rows[r][k:]), "target not in column space"
    return tuple(tuple(rows[i][k:]) for i in range(k))
