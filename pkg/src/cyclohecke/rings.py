"""
Exact parameter rings: multivariate Laurent polynomials over a cyclotomic
field, optional adjoined radicals, reduced rational functions, and truncated
power series.

Every named variable is invertible (Laurent convention).  An adjoined radical
v is declared by a relation v^e = c * monomial over earlier variables; stored
exponents of v are always reduced into [0, e), so canonical forms are unique.
Rational functions keep a radical-free denominator (denominators are cleared
by multiplying through the e conjugates v -> zeta_e^k v) and are reduced by a
multivariate gcd, with the denominator normalized to have leading coefficient
one and nonnegative exponents with zero minimum.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .scalars import Cyc, Rat, zeta

__all__ = [
    "RootRelation",
    "ParameterRing",
    "LaurentPoly",
    "RationalFn",
    "Series",
    "normalize_rational",
]


@dataclass(frozen=True)
class RootRelation:
    """Adjoined radical: var^power = coeff * prod(monomial)."""

    var: str
    power: int
    coeff: Cyc
    monomial: tuple[tuple[str, int], ...]  # over earlier, non-radical variables
    dual_coeff: Cyc | None = None          # image of var under u -> 1/u is
    dual_monomial: tuple[tuple[str, int], ...] = ()  # dual_coeff * var * dual_monomial
    standard_value: Cyc | None = None      # value under the standard specialization


class ParameterRing:
    """An ordered list of invertible variables plus radical declarations."""

    def __init__(self, variables, conductor: int = 1, roots: tuple[RootRelation, ...] = ()):
        self.variables = tuple(variables)
        self.conductor = conductor
        self.index = {v: i for i, v in enumerate(self.variables)}
        self.roots: dict[str, RootRelation] = {}
        for rel in roots:
            if rel.var not in self.index:
                raise ValueError(f"root variable {rel.var} not in ring")
            for v, _ in rel.monomial:
                if self.index[v] >= self.index[rel.var] or v in self.roots:
                    raise ValueError(f"root relation for {rel.var} is not triangular")
            self.roots[rel.var] = rel
        self.nvars = len(self.variables)

    def __repr__(self):
        return f"ParameterRing({','.join(self.variables)})"

    def __eq__(self, other):
        return (
            isinstance(other, ParameterRing)
            and self.variables == other.variables
            and self.conductor == other.conductor
            and self.roots.keys() == other.roots.keys()
        )

    def __hash__(self):
        return hash((self.variables, self.conductor, tuple(sorted(self.roots))))

    # -- element constructors -----------------------------------------

    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    def one(self) -> "LaurentPoly":
        return self.scalar(1)

    def scalar(self, c) -> "LaurentPoly":
        c = c if isinstance(c, Cyc) else Cyc.rational(c)
        if c.is_zero():
            return self.zero()
        return LaurentPoly(self, {(0,) * self.nvars: c})

    def var(self, name: str, power: int = 1) -> "LaurentPoly":
        exps = [0] * self.nvars
        exps[self.index[name]] = power
        return LaurentPoly(self, {tuple(exps): Cyc.rational(1)})

    def monomial(self, exps, coeff=1) -> "LaurentPoly":
        c = coeff if isinstance(coeff, Cyc) else Cyc.rational(coeff)
        return LaurentPoly(self, {tuple(exps): c})

    def root_free(self) -> bool:
        return not self.roots

    def dual_exponent_term(self, exps: tuple[int, ...]):
        """Image of a single monomial under the bar involution u -> 1/u."""
        coeff = Cyc.rational(1)
        out = [0] * self.nvars
        for i, e in enumerate(exps):
            if not e:
                continue
            name = self.variables[i]
            rel = self.roots.get(name)
            if rel is None:
                out[i] -= e
            else:
                if rel.dual_coeff is None:
                    raise ValueError(f"no dual declared for radical {name}")
                # var -> dual_coeff * var * dual_monomial, raised to e
                coeff = coeff * rel.dual_coeff**e
                out[i] += e
                for v, k in rel.dual_monomial:
                    out[self.index[v]] += k * e
        return coeff, tuple(out)


class LaurentPoly:
    """Multivariate Laurent polynomial with cyclotomic coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: ParameterRing, terms: dict, reduce: bool = True):
        self.ring = ring
        if reduce and ring.roots:
            terms = _reduce_roots(ring, terms)
        self.terms = {e: c for e, c in terms.items() if not c.is_zero()}

    # -- basic structure ------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_scalar(self) -> bool:
        return not self.terms or set(self.terms) == {(0,) * self.ring.nvars}

    def as_scalar(self) -> Cyc:
        if self.is_zero():
            return Cyc.rational(0)
        [(e, c)] = self.terms.items()
        if any(e):
            raise ValueError(f"{self} is not a scalar")
        return c

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit(self) -> bool:
        """Single term whose coefficient is a sign times a root of unity."""
        if len(self.terms) != 1:
            return False
        [c] = self.terms.values()
        return c.is_root_of_unity_times_sign()

    def key(self):
        return tuple(sorted((e, c.key()) for e, c in self.terms.items()))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Cyc)):
            other = self.ring.scalar(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.key())

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction, Cyc)):
            return self.ring.scalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            out[e] = c if s is None else s + c
        return LaurentPoly(self.ring, out, reduce=False)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.ring, {e: -c for e, c in self.terms.items()}, reduce=False)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = c1 * c2
                s = out.get(e)
                out[e] = c if s is None else s + c
        return LaurentPoly(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            inv = self.monomial_inverse()
            return inv ** (-k)
        out = self.ring.one()
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def monomial_inverse(self) -> "LaurentPoly":
        if len(self.terms) != 1:
            raise ValueError("only monomials invert inside the Laurent ring")
        [(e, c)] = self.terms.items()
        # radical exponents cannot be negated blindly; go through reduction
        inv_exps = tuple(-x for x in e)
        return LaurentPoly(self.ring, {inv_exps: c.inverse()})

    # -- views ----------------------------------------------------------

    def leading(self):
        """(exps, coeff) maximal in lexicographic exponent order."""
        e = max(self.terms)
        return e, self.terms[e]

    def degree_in(self, name: str) -> int:
        i = self.ring.index[name]
        return max((e[i] for e in self.terms), default=0)

    def valuation_in(self, name: str) -> int:
        i = self.ring.index[name]
        return min((e[i] for e in self.terms), default=0)

    def coefficient_of(self, name: str, power: int) -> "LaurentPoly":
        i = self.ring.index[name]
        out = {}
        for e, c in self.terms.items():
            if e[i] == power:
                out[e[:i] + (0,) + e[i + 1 :]] = c
        return LaurentPoly(self.ring, out, reduce=False)

    def map_coefficients(self, fn) -> "LaurentPoly":
        return LaurentPoly(self.ring, {e: fn(c) for e, c in self.terms.items()})

    def involves_roots(self) -> bool:
        for name, rel in self.ring.roots.items():
            i = self.ring.index[name]
            if any(e[i] for e in self.terms):
                return True
        return False

    # -- involution and specialization -----------------------------------

    def dual(self) -> "LaurentPoly":
        """The bar involution u -> 1/u, extended to radicals as declared."""
        out: dict = {}
        for e, c in self.terms.items():
            k, exps = self.ring.dual_exponent_term(e)
            val = c * k
            s = out.get(exps)
            out[exps] = val if s is None else s + val
        return LaurentPoly(self.ring, out)

    def specialize(self, assignment: dict) -> Cyc:
        """Exact evaluation; assignment maps every variable to a Cyc/Fraction."""
        vals = _checked_assignment(self.ring, assignment)
        total = Cyc.rational(0)
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    term = term * vals[i] ** k
            total = total + term
        return total

    def substitute(self, mapping: dict) -> "LaurentPoly":
        """Replace variables by LaurentPoly values (used by Galois twists)."""
        out = self.ring.zero()
        for e, c in self.terms.items():
            term = self.ring.scalar(c)
            for i, k in enumerate(e):
                if k:
                    name = self.ring.variables[i]
                    base = mapping.get(name)
                    if base is None:
                        base = self.ring.var(name)
                    term = term * base**k
            out = out + term
        return out

    def __repr__(self):
        if self.is_zero():
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"{v}^{k}" if k != 1 else v
                for v, k in zip(self.ring.variables, e)
                if k
            )
            cs = repr(c)[4:-1]
            bits.append(f"({cs})" + ("*" + mono if mono else ""))
        return " + ".join(bits)


def _reduce_roots(ring: ParameterRing, terms: dict) -> dict:
    """Rewrite so every radical exponent lies in [0, power)."""
    out: dict = {}
    work = list(terms.items())
    while work:
        exps, coeff = work.pop()
        if coeff.is_zero():
            continue
        exps = list(exps)
        dirty = False
        for name, rel in ring.roots.items():
            i = ring.index[name]
            e = exps[i]
            if 0 <= e < rel.power:
                continue
            q, r = divmod(e, rel.power)
            exps[i] = r
            coeff = coeff * rel.coeff**q
            for v, k in rel.monomial:
                exps[ring.index[v]] += k * q
            dirty = True
        key = tuple(exps)
        if dirty:
            work.append((key, coeff))
            continue
        s = out.get(key)
        tot = coeff if s is None else s + coeff
        if tot.is_zero():
            out.pop(key, None)
        else:
            out[key] = tot
    return out


def _checked_assignment(ring: ParameterRing, assignment: dict) -> list[Cyc]:
    vals = []
    for name in ring.variables:
        if name not in assignment:
            raise ValueError(f"assignment missing variable {name}")
        v = assignment[name]
        v = v if isinstance(v, Cyc) else Cyc.rational(v)
        vals.append(v)
    for name, rel in ring.roots.items():
        target = rel.coeff
        for v, k in rel.monomial:
            target = target * vals[ring.index[v]] ** k
        got = vals[ring.index[name]] ** rel.power
        if got != target:
            raise ValueError(f"assignment inconsistent with {name}^{rel.power} relation")
    return vals


# ---------------------------------------------------------------------------
# polynomial gcd over the coefficient field (radical-free part of the ring)
# ---------------------------------------------------------------------------


def _poly_divmod_terms(num: dict, den: dict, nvars: int):
    """Division in the polynomial ring, lex term order; returns (quo, rem)."""
    num = dict(num)
    quo: dict = {}
    den_lead = max(den)
    den_lc = den[den_lead]
    while num:
        lead = max(num)
        diff = tuple(a - b for a, b in zip(lead, den_lead))
        if any(d < 0 for d in diff):
            break
        c = num[lead] / den_lc
        quo[diff] = quo.get(diff, Cyc.rational(0)) + c
        for e, d in den.items():
            key = tuple(a + b for a, b in zip(diff, e))
            v = num.get(key, Cyc.rational(0)) - c * d
            if v.is_zero():
                num.pop(key, None)
            else:
                num[key] = v
    return quo, num


def _exact_divide_terms(num: dict, den: dict, nvars: int):
    quo, rem = _poly_divmod_terms(num, den, nvars)
    return quo if not rem else None


def _gcd_univariate(a: dict, b: dict, var: int, nvars: int) -> dict:
    while b:
        _, r = _poly_divmod_terms(a, b, nvars)
        a, b = b, r
    lead = max(a)
    lc = a[lead]
    return {e: c / lc for e, c in a.items()}


def _vars_used(terms: dict) -> list[int]:
    used = set()
    for e in terms:
        for i, k in enumerate(e):
            if k:
                used.add(i)
    return sorted(used)


def _gcd_terms(a: dict, b: dict, nvars: int) -> dict:
    """gcd of two polynomial term-dicts (all exponents nonnegative)."""
    one = {(0,) * nvars: Cyc.rational(1)}
    if not a:
        return _monic(b) if b else {}
    if not b:
        return _monic(a)
    used = sorted(set(_vars_used(a)) | set(_vars_used(b)))
    if not used:
        return one
    main = used[-1]
    if len(used) == 1:
        return _gcd_univariate(a, b, main, nvars)

    def split(terms):
        out: dict[int, dict] = {}
        for e, c in terms.items():
            out.setdefault(e[main], {})[e[:main] + (0,) + e[main + 1 :]] = c
        return out

    def join(coeffs: dict[int, dict]):
        out = {}
        for k, sub in coeffs.items():
            for e, c in sub.items():
                out[e[:main] + (k,) + e[main + 1 :]] = c
        return out

    def content(coeffs: dict[int, dict]):
        g: dict = {}
        for sub in coeffs.values():
            g = _gcd_terms(g, sub, nvars)
            if g == one:
                break
        return g

    def divide_all(coeffs, g):
        if g == one:
            return coeffs
        return {k: _exact_divide_terms(sub, g, nvars) for k, sub in coeffs.items()}

    sa, sb = split(a), split(b)
    ca, cb = content(sa), content(sb)
    pa, pb = join(divide_all(sa, ca)), join(divide_all(sb, cb))
    cg = _gcd_terms(ca, cb, nvars)

    # primitive pseudo-remainder sequence in the main variable
    def degree(t):
        return max(e[main] for e in t)

    def lead_coeff(t):
        d = degree(t)
        return {e[:main] + (0,) + e[main + 1 :]: c for e, c in t.items() if e[main] == d}

    def primitive(t):
        s = split(t)
        c = content(s)
        return join(divide_all(s, c))

    f, g = (pa, pb) if degree(pa) >= degree(pb) else (pb, pa)
    while g:
        # pseudo-division: lc(g)^(deg f - deg g + 1) * f = q*g + r
        df, dg = degree(f), degree(g)
        lc = lead_coeff(g)
        scaled = f
        for _ in range(df - dg + 1):
            scaled = _mul_terms(scaled, lc, nvars)
        _, r = _poly_divmod_terms(scaled, g, nvars)
        f, g = g, (primitive(r) if r else {})
    prim = primitive(f)
    out = _mul_terms(cg, prim, nvars)
    return _monic(out)


def _mul_terms(a: dict, b: dict, nvars: int) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            e = tuple(x + y for x, y in zip(e1, e2))
            c = c1 * c2
            s = out.get(e)
            tot = c if s is None else s + c
            if tot.is_zero():
                out.pop(e, None)
            else:
                out[e] = tot
    return out


def _monic(terms: dict) -> dict:
    if not terms:
        return {}
    lc = terms[max(terms)]
    if lc == Cyc.rational(1):
        return dict(terms)
    inv = lc.inverse()
    return {e: c * inv for e, c in terms.items()}


def laurent_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """gcd up to monomial units; result is a polynomial with unit-free normal form."""
    ring = a.ring
    ta = _shift_nonneg(a.terms)
    tb = _shift_nonneg(b.terms)
    g = _gcd_terms(ta, tb, ring.nvars)
    return LaurentPoly(ring, g, reduce=False)


def _shift_nonneg(terms: dict) -> dict:
    if not terms:
        return {}
    nvars = len(next(iter(terms)))
    mins = [min(e[i] for e in terms) for i in range(nvars)]
    return {tuple(x - m for x, m in zip(e, mins)): c for e, c in terms.items()}


def exact_divide(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly | None:
    """a / b when the quotient lies in the Laurent ring, else None."""
    if b.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if a.is_zero():
        return a.ring.zero()
    # monomial shifts are units; divide shifted polynomials, correct at the end
    tb = _shift_nonneg(b.terms)
    mins = [min(e[i] for e in b.terms) for i in range(a.ring.nvars)]
    ta = _shift_nonneg(a.terms)
    amins = [min(e[i] for e in a.terms) for i in range(a.ring.nvars)]
    q = _exact_divide_terms(ta, tb, a.ring.nvars)
    if q is None:
        return None
    shift = tuple(am - bm for am, bm in zip(amins, mins))
    return LaurentPoly(a.ring, {tuple(x + s for x, s in zip(e, shift)): c for e, c in q.items()})


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class RationalFn:
    """Reduced fraction of Laurent polynomials with radical-free denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly, reduced: bool = False):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not reduced:
            num, den = _normalize(num, den)
        self.num = num
        self.den = den

    @property
    def ring(self):
        return self.num.ring

    @staticmethod
    def from_poly(p: LaurentPoly) -> "RationalFn":
        return RationalFn(p, p.ring.one(), reduced=True)

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RationalFn):
            return other
        if isinstance(other, LaurentPoly):
            return RationalFn.from_poly(other)
        if isinstance(other, (int, Fraction, Cyc)):
            return RationalFn.from_poly(self.ring.scalar(other))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFn(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFn(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFn(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFn(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def inverse(self):
        return RationalFn(self.den, self.num)

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = RationalFn.from_poly(self.ring.one())
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self.num * o.den - o.num * self.den).is_zero()

    def __hash__(self):
        return hash((self.num.key(), self.den.key()))

    def is_zero(self):
        return self.num.is_zero()

    # -- membership and evaluation ----------------------------------------

    def is_polynomial(self) -> bool:
        """True iff the reduced denominator is a monomial unit."""
        return self.den.is_unit()

    def as_laurent(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise ValueError(f"{self!r} has a nontrivial denominator")
        return self.num * self.den.monomial_inverse()

    def dual(self) -> "RationalFn":
        return RationalFn(self.num.dual(), self.den.dual())

    def specialize(self, assignment: dict) -> Cyc:
        d = self.den.specialize(assignment)
        if d.is_zero():
            raise ZeroDivisionError("denominator vanishes under assignment")
        return self.num.specialize(assignment) / d

    def __repr__(self):
        if self.den == self.ring.one():
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


def _clear_radicals(num: LaurentPoly, den: LaurentPoly):
    """Multiply through by radical conjugates until the denominator is free."""
    ring = den.ring
    for name, rel in ring.roots.items():
        i = ring.index[name]
        while any(e[i] for e in den.terms):
            # multiply num and den by prod over k=1..e-1 of (v -> zeta_e^k v)(den)
            factor = ring.one()
            for k in range(1, rel.power):
                factor = factor * _root_twist(den, name, k)
            num = num * factor
            den = den * factor
    return num, den


def _g(a, b):
    from math import gcd as _gg

    return _gg(a, b)


def _root_twist(p: LaurentPoly, name: str, k: int) -> LaurentPoly:
    """Apply v -> zeta_e^k * v to the radical variable `name`."""
    ring = p.ring
    rel = ring.roots[name]
    i = ring.index[name]
    m = rel.power * ring.conductor // _g(rel.power, ring.conductor)
    out = {}
    for e, c in p.terms.items():
        factor = zeta(m, (m // rel.power) * ((k * e[i]) % rel.power))
        out[e] = c * factor
    return LaurentPoly(ring, out, reduce=False)


def _normalize(num: LaurentPoly, den: LaurentPoly):
    ring = num.ring
    if den.involves_roots():
        num, den = _clear_radicals(num, den)
    if num.is_zero():
        return num, ring.one()
    if den.is_unit():
        return num * den.monomial_inverse(), ring.one()
    if num.involves_roots():
        # reduce the radical-free content of the numerator against den
        g = laurent_gcd(den, _radical_content(num))
    else:
        g = laurent_gcd(num, den)
    if not g.is_unit():
        num = exact_divide(num, g)
        den = exact_divide(den, g)
    # normalize: leading coefficient of den is 1, exponent minima are 0
    lead_e, lead_c = den.leading()
    mins = [min(e[i] for e in den.terms) for i in range(ring.nvars)]
    unit = LaurentPoly(ring, {tuple(mins): lead_c})
    inv = unit.monomial_inverse()
    return num * inv, den * inv


def _radical_content(p: LaurentPoly) -> LaurentPoly:
    """gcd of the radical-free slices of p (radical exponent patterns fixed)."""
    ring = p.ring
    root_idx = [ring.index[v] for v in ring.roots]
    slices: dict[tuple, dict] = {}
    for e, c in p.terms.items():
        key = tuple(e[i] for i in root_idx)
        stripped = list(e)
        for i in root_idx:
            stripped[i] = 0
        slices.setdefault(key, {})[tuple(stripped)] = c
    g = ring.zero()
    for sub in slices.values():
        g = laurent_gcd(g, LaurentPoly(ring, sub, reduce=False))
        if g.is_unit():
            break
    return g


def normalize_rational(num: LaurentPoly, den: LaurentPoly) -> RationalFn:
    """The unique reduced, normalized representative of num/den."""
    return RationalFn(num, den)


# ---------------------------------------------------------------------------
# truncated power series
# ---------------------------------------------------------------------------


class Series:
    """Truncated power series sum coeffs[j] * r^j + O(r^order)."""

    __slots__ = ("coeffs", "order", "zero")

    def __init__(self, coeffs, order: int, zero=None):
        self.zero = zero if zero is not None else Cyc.rational(0)
        self.order = order
        coeffs = list(coeffs)[:order]
        coeffs += [self.zero] * (order - len(coeffs))
        self.coeffs = coeffs

    @staticmethod
    def constant(c, order: int, zero=None) -> "Series":
        return Series([c], order, zero=zero)

    def __add__(self, other):
        order = min(self.order, other.order)
        return Series(
            [a + b for a, b in zip(self.coeffs[:order], other.coeffs[:order])],
            order,
            zero=self.zero,
        )

    def __sub__(self, other):
        order = min(self.order, other.order)
        return Series(
            [a - b for a, b in zip(self.coeffs[:order], other.coeffs[:order])],
            order,
            zero=self.zero,
        )

    def __neg__(self):
        return Series([-a for a in self.coeffs], self.order, zero=self.zero)

    def __mul__(self, other):
        order = min(self.order, other.order)
        out = [self.zero for _ in range(order)]
        for i, a in enumerate(self.coeffs[:order]):
            if _is_zeroish(a):
                continue
            for j, b in enumerate(other.coeffs[: order - i]):
                if not _is_zeroish(b):
                    out[i + j] = out[i + j] + a * b
        return Series(out, order, zero=self.zero)

    def inverse(self) -> "Series":
        c0 = self.coeffs[0]
        if _is_zeroish(c0):
            raise ZeroDivisionError("series has no invertible constant term")
        inv0 = c0.inverse() if hasattr(c0, "inverse") else 1 / c0
        out = [inv0]
        for k in range(1, self.order):
            acc = self.zero
            for j in range(1, k + 1):
                acc = acc + self.coeffs[j] * out[k - j]
            out.append(-(inv0 * acc))
        return Series(out, self.order, zero=self.zero)

    def shift(self, k: int) -> "Series":
        """Multiply by r^k (k >= 0 pads low coefficients with zero)."""
        if k >= 0:
            return Series([self.zero] * k + self.coeffs, self.order + k, zero=self.zero)
        if any(not _is_zeroish(c) for c in self.coeffs[:-k]):
            raise ValueError("negative shift would truncate nonzero terms")
        return Series(self.coeffs[-k:], self.order + k, zero=self.zero)

    def valuation(self):
        for i, c in enumerate(self.coeffs):
            if not _is_zeroish(c):
                return i
        return None

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        order = min(self.order, other.order)
        return all(
            _is_zeroish(a - b) for a, b in zip(self.coeffs[:order], other.coeffs[:order])
        )

    def __repr__(self):
        return f"Series({self.coeffs!r} + O(r^{self.order}))"


def _is_zeroish(c) -> bool:
    if hasattr(c, "is_zero"):
        return c.is_zero()
    return c == 0


def series_arith(a: Series, b: Series | None, op: str) -> Series:
    """Spec-facing dispatcher: op in {'add', 'mul', 'inverse'}."""
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "inverse":
        return a.inverse()
    raise ValueError(f"unknown series op {op!r}")
