"""
Cyclotomic Hecke algebra representations as exact matrices.

A representation binds a presentation to one matrix per generator over a
parameter ring (entries Laurent polynomials, or rational functions when
needed) together with the eigenvalue list of each generator, i.e. the
parameters appearing in its deformed order relation prod (T - u_i) = 0.

Characters of positive words are evaluated with two cost reductions: words
are rotated to a canonical form first (the trace is invariant under rotation
and under the defining relations), and for order-2 generators a repeated
letter is eliminated through the quadratic relation, trading one word for
two strictly shorter ones.  Matrix products for whatever words remain are
taken through a shared prefix cache so no product is computed twice.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .braids import Presentation
from .rings import LaurentPoly, ParameterRing, RationalFn

__all__ = ["HeckeRep", "CheckReport", "hecke_identity", "hecke_zero"]


def hecke_identity(ring: ParameterRing, n: int):
    one, zero = ring.one(), ring.zero()
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def hecke_zero(ring: ParameterRing, n: int):
    zero = ring.zero()
    return tuple(tuple(zero for _ in range(n)) for _ in range(n))


def _mmul(a, b):
    bt = list(zip(*b))
    out = []
    for row in a:
        orow = []
        for col in bt:
            acc = None
            for x, y in zip(row, col):
                if x.is_zero() or y.is_zero():
                    continue
                term = x * y
                acc = term if acc is None else acc + term
            if acc is None:
                acc = row[0].ring.zero()
            orow.append(acc)
        out.append(tuple(orow))
    return tuple(out)


def _meq(a, b) -> bool:
    return all(
        (x - y).is_zero() for ra, rb in zip(a, b) for x, y in zip(ra, rb)
    )


@dataclass
class CheckReport:
    """Outcome of the exact relation and eigenvalue checks."""

    braid: dict
    orders: dict

    @property
    def ok(self) -> bool:
        return all(self.braid.values()) and all(self.orders.values())

    def failures(self) -> list[str]:
        out = [f"braid:{k}" for k, v in self.braid.items() if not v]
        out += [f"order:{k}" for k, v in self.orders.items() if not v]
        return out


@dataclass
class HeckeRep:
    """Matrices for the generators of a Hecke algebra presentation."""

    presentation: Presentation
    ring: ParameterRing
    matrices: tuple                      # one square matrix per generator
    eigenvalues: tuple                   # per generator: tuple of LaurentPoly
    label: str | None = None
    _word_cache: dict = field(default_factory=dict, repr=False)
    _trace_cache: dict = field(default_factory=dict, repr=False)

    @property
    def dimension(self) -> int:
        return len(self.matrices[0])

    # -- exact checks -----------------------------------------------------

    def check(self) -> CheckReport:
        braid = {}
        for k, (lhs, rhs) in enumerate(self.presentation.relations):
            braid[f"{self.presentation.word_str(lhs)}={self.presentation.word_str(rhs)}"] = _meq(
                self.word_matrix(lhs), self.word_matrix(rhs)
            )
        orders = {}
        n = self.dimension
        for g, mat in enumerate(self.matrices):
            prod = hecke_identity(self.ring, n)
            for ev in self.eigenvalues[g]:
                shifted = tuple(
                    tuple(mat[i][j] - (ev if i == j else self.ring.zero()) for j in range(n))
                    for i in range(n)
                )
                prod = _mmul(prod, shifted)
            orders[self.presentation.letters[g]] = _meq(prod, hecke_zero(self.ring, n))
        return CheckReport(braid, orders)

    # -- word evaluation ----------------------------------------------------

    def generator_inverse(self, g: int):
        """T_g^-1 from the deformed order relation (eigenvalues are units)."""
        evs = self.eigenvalues[g]
        n = self.dimension
        # prod (T - u_i) = 0  =>  T^-1 = (-1)^(d-1)/prod(u_i) * prod_{i>=1}(T - u_i)
        # expand via the elementary symmetric functions instead, iteratively:
        # T^-1 = (T^(d-1) - e1 T^(d-2) + ... +- e_{d-1}) / (+- e_d)
        d = len(evs)
        es = [self.ring.one()]
        for ev in evs:
            nxt = [self.ring.zero()] * (len(es) + 1)
            for i, c in enumerate(es):
                nxt[i] = nxt[i] + c
                nxt[i + 1] = nxt[i + 1] + c * ev
            es = nxt  # es[i] = e_i with signs folded below
        # es[i] here is the plain elementary symmetric e_i
        t = self.matrices[g]
        acc = hecke_zero(self.ring, n)
        power = hecke_identity(self.ring, n)
        # sum_{i=0}^{d-1} (-1)^(d-1-i) e_{d-1-i} T^i, then divide by e_d
        terms = []
        for i in range(d):
            coeff = es[d - 1 - i]
            sign = -1 if (d - 1 - i) % 2 else 1
            terms.append((sign, coeff))
        for i, (sign, coeff) in enumerate(terms):
            scaled = tuple(
                tuple((x * coeff if sign > 0 else -(x * coeff)) for x in row) for row in power
            )
            acc = tuple(
                tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(acc, scaled)
            )
            if i + 1 < d:
                power = _mmul(power, t)
        det_term = es[d]
        if not det_term.is_monomial():
            raise ValueError("product of eigenvalues is not a monomial unit")
        inv_det = det_term.monomial_inverse()
        if (d - 1) % 2:
            inv_det = -inv_det
        return tuple(tuple(x * inv_det for x in row) for row in acc)

    def word_matrix(self, word):
        """Image of a (possibly signed) word, with shared-prefix caching."""
        word = tuple(word)
        if not word:
            return hecke_identity(self.ring, self.dimension)
        cached = self._word_cache.get(word)
        if cached is not None:
            return cached
        # greedy: longest cached prefix, then extend letter by letter
        best = None
        for k in range(len(word) - 1, 0, -1):
            if word[:k] in self._word_cache:
                best = k
                break
        if best is None:
            mat = self._letter_matrix(word[0])
            self._word_cache[word[:1]] = mat
            best = 1
        mat = self._word_cache[word[:best]]
        for k in range(best, len(word)):
            mat = _mmul(mat, self._letter_matrix(word[k]))
            self._word_cache[word[: k + 1]] = mat
        return mat

    def _letter_matrix(self, g: int):
        if g >= 0:
            return self.matrices[g]
        key = ("inv", -1 - g)
        cached = self._word_cache.get(key)
        if cached is None:
            cached = self.generator_inverse(-1 - g)
            self._word_cache[key] = cached
        return cached

    def trace_of_matrix(self, m):
        acc = self.ring.zero()
        for i in range(len(m)):
            acc = acc + m[i][i]
        return acc

    def character_value(self, word):
        """Exact trace of the word image, with rotation canonicalization and
        quadratic reduction on repeated order-2 letters."""
        word = tuple(word)
        key = _rotation_canonical(word) if all(g >= 0 for g in word) else word
        cached = self._trace_cache.get(key)
        if cached is not None:
            return cached
        val = self._character_uncached(key)
        self._trace_cache[key] = val
        return val

    def _character_uncached(self, word):
        # quadratic reduction: for an order-2 letter g with parameters (a, b),
        # T_g T_g = (a + b) T_g - a b, so a doubled letter drops the length.
        if all(g >= 0 for g in word):
            spot = _find_double(word)
            if spot is not None:
                g = word[spot]
                if len(self.eigenvalues[g]) == 2:
                    a, b = self.eigenvalues[g]
                    shorter = word[:spot] + word[spot + 1 :]
                    shortest = word[:spot] + word[spot + 2 :]
                    return (a + b) * self.character_value(shorter) - (
                        a * b
                    ) * self.character_value(shortest)
        return self.trace_of_matrix(self.word_matrix(word))

    def central_character(self, word):
        """Scalar by which a central word acts; raises if not scalar."""
        m = self.word_matrix(word)
        n = len(m)
        scalar = m[0][0]
        for i in range(n):
            for j in range(n):
                want = scalar if i == j else self.ring.zero()
                if not (m[i][j] - want).is_zero():
                    raise ValueError("word does not act as a scalar")
        return scalar

    # -- Galois twisting -----------------------------------------------------

    def parameter_twist(self, mapping: dict, root_images: dict | None = None,
                        label: str | None = None) -> "HeckeRep":
        """Permute parameters (variable -> variable name map); adjoined roots
        may be sent to +-themselves via root_images (name -> +1/-1)."""
        ring = self.ring
        sub = {}
        for old, new in mapping.items():
            sub[old] = ring.var(new)
        for name, sgn in (root_images or {}).items():
            sub[name] = ring.var(name) if sgn > 0 else -ring.var(name)
        for rel in ring.roots.values():
            # consistency: image of the relation must still hold
            lhs = sub.get(rel.var, ring.var(rel.var)) ** rel.power
            rhs = ring.scalar(rel.coeff)
            for v, k in rel.monomial:
                rhs = rhs * sub.get(v, ring.var(v)) ** k
            if not (lhs - rhs).is_zero():
                raise ValueError("parameter permutation breaks a root relation")
        mats = tuple(
            tuple(tuple(x.substitute(sub) for x in row) for row in m) for m in self.matrices
        )
        evs = tuple(
            tuple(ev.substitute(sub) for ev in evlist) for evlist in self.eigenvalues
        )
        return HeckeRep(self.presentation, ring, mats, evs, label=label)

    def scalar_galois(self, k: int, label: str | None = None) -> "HeckeRep":
        """Apply the coefficient-field automorphism zeta -> zeta^k entrywise."""
        mats = tuple(
            tuple(tuple(x.map_coefficients(lambda c: c.galois(k)) for x in row) for row in m)
            for m in self.matrices
        )
        evs = tuple(
            tuple(ev.map_coefficients(lambda c: c.galois(k)) for ev in evlist)
            for evlist in self.eigenvalues
        )
        return HeckeRep(self.presentation, self.ring, mats, evs, label=label)

    def specialize(self, assignment: dict):
        """Numeric matrices under a full parameter assignment."""
        return tuple(
            tuple(tuple(x.specialize(assignment) for x in row) for row in m)
            for m in self.matrices
        )


def _find_double(word):
    for i in range(len(word) - 1):
        if word[i] == word[i + 1]:
            return i
    return None


def _rotation_canonical(word):
    if not word:
        return word
    return min(word[i:] + word[:i] for i in range(len(word)))
