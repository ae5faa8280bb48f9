"""
Braid-group presentations as data, and the word calculus around them.

A presentation is a list of pairs of positive words of equal length over
single-letter generator names.  Words over a presentation are stored as
tuples of generator positions (0-based).  The Hurwitz action is computed on
tuples of group-element indices: the braid-level statement only needs the
images in W, where conjugation is exact and cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from collections import deque

from .groups import ReflectionGroup, poincare_coefficients

__all__ = [
    "Presentation",
    "BraidWord",
    "hurwitz_orbit",
    "hurwitz_move",
    "classify_orbit",
    "rotation_braid_orbits",
    "pi_word",
    "parse_word",
]


def parse_word(text: str, letters: str) -> tuple[int, ...]:
    """Parse 'stu'-style words; uppercase letters denote inverses (-1-k)."""
    out = []
    for ch in text:
        if ch in letters:
            out.append(letters.index(ch))
        elif ch.lower() in letters:
            out.append(-1 - letters.index(ch.lower()))
        else:
            raise ValueError(f"unknown letter {ch!r} for alphabet {letters!r}")
    return tuple(out)


@dataclass(frozen=True)
class Presentation:
    """Generators with orders, and defining pairs of positive words.

    `delta_orders`, when set, lists the letter orders that count as genuine
    delta-ordered realizations when classifying Hurwitz decompositions; the
    source material distinguishes some presentations (opposite pairs, or
    lookalikes with identical image relations) only at the braid level, so
    the classifier needs this extra pinned data.
    """

    name: str
    letters: str
    orders: tuple[int, ...]
    relations: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    delta: tuple[int, ...] = ()
    delta_orders: frozenset | None = None

    def __post_init__(self):
        for lhs, rhs in self.relations:
            if len(lhs) != len(rhs):
                raise ValueError(
                    f"{self.name}: relation {lhs}={rhs} pairs words of unequal length"
                )
        if not self.delta:
            object.__setattr__(self, "delta", tuple(range(len(self.letters))))

    @staticmethod
    def from_strings(name, letters, orders, relation_pairs, delta=None, delta_orders=None):
        rels = tuple(
            (parse_word(a, letters), parse_word(b, letters)) for a, b in relation_pairs
        )
        d = parse_word(delta, letters) if delta else None
        orders_set = frozenset(delta_orders) if delta_orders else None
        return Presentation(name, letters, tuple(orders), rels, d or (), orders_set)

    @property
    def ngens(self) -> int:
        return len(self.letters)

    def word_str(self, word) -> str:
        return "".join(
            self.letters[g] if g >= 0 else self.letters[-1 - g].upper() for g in word
        )

    def relations_hold(self, group: ReflectionGroup, images: tuple[int, ...]) -> bool:
        """Test all defining relations in W for the given generator images."""
        for lhs, rhs in self.relations:
            a = 0
            for g in lhs:
                a = group.mul(a, images[g])
            b = 0
            for g in rhs:
                b = group.mul(b, images[g])
            if a != b:
                return False
        return True

    def orders_hold(self, group: ReflectionGroup, images: tuple[int, ...]) -> bool:
        return all(
            group.element_order(images[g]) == self.orders[g] for g in range(self.ngens)
        )


@dataclass(frozen=True)
class BraidWord:
    """Freely reduced word; entries >= 0 are generators, -1-k inverse of k."""

    word: tuple[int, ...]
    positive: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "word", _free_reduce(self.word))
        object.__setattr__(self, "positive", all(g >= 0 for g in self.word))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.word + other.word)

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(-1 - g for g in reversed(self.word)))

    def __len__(self):
        return len(self.word)


def _free_reduce(word) -> tuple[int, ...]:
    out: list[int] = []
    for g in word:
        if out and out[-1] == -1 - g or out and g == -1 - out[-1]:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


# -- Hurwitz action ---------------------------------------------------------


def hurwitz_move(group: ReflectionGroup, tup: tuple[int, ...], i: int, inverse=False):
    """Adjacent move at position i: (a, b) -> (b, b^-1 a b), or its inverse."""
    a, b = tup[i], tup[i + 1]
    if not inverse:
        new = (b, group.conjugate(a, b))
    else:
        new = (group.conjugate(b, group.inverse[a]), a)
    return tup[:i] + new + tup[i + 2 :]


def hurwitz_orbit(group: ReflectionGroup, seed: tuple[int, ...], expect_product=None):
    """Closure of the seed tuple under all adjacent moves and their inverses."""
    c = 0
    for a in seed:
        c = group.mul(c, a)
    if expect_product is not None and c != expect_product:
        raise ValueError("seed does not multiply to the expected element")
    refl = set(group.reflections)
    if any(a not in refl for a in seed):
        raise ValueError("seed entries must be reflections")
    n = len(seed)
    seen = {seed}
    queue = deque([seed])
    while queue:
        tup = queue.popleft()
        for i in range(n - 1):
            for inv in (False, True):
                new = hurwitz_move(group, tup, i, inverse=inv)
                if new not in seen:
                    seen.add(new)
                    queue.append(new)
    return seen


def _assignments(n: int):
    """All bijections letter -> position, as tuples pos[letter]."""
    import itertools

    return list(itertools.permutations(range(n)))


def classify_orbit(group: ReflectionGroup, orbit, candidates: list[Presentation]):
    """
    Assign each decomposition to the presentation whose relations its tuple
    satisfies under some assignment of letters to positions.  Ambiguities are
    broken by the Poincare fingerprint of the generating set; any remainder
    is reported, never dropped.
    """
    perms = _assignments(len(next(iter(orbit))))
    counts = {p.name: 0 for p in candidates}
    unclassified = []
    ambiguous = []
    fingerprints: dict[str, tuple] = {}
    pending: list[tuple] = []

    def matches(tup, pres):
        for perm in perms:
            images = tuple(tup[perm[j]] for j in range(pres.ngens))
            if pres.relations_hold(group, images):
                if pres.delta_orders is None:
                    return True
                invp = [0] * pres.ngens
                for j in range(pres.ngens):
                    invp[perm[j]] = j
                lam = "".join(pres.letters[j] for j in invp)
                if lam in pres.delta_orders:
                    return True
        return False

    first_pass: dict[tuple, list[str]] = {}
    for tup in sorted(orbit):
        hits = [p.name for p in candidates if matches(tup, p)]
        first_pass[tup] = hits
        if len(hits) == 1:
            counts[hits[0]] += 1
            name = hits[0]
            if name not in fingerprints:
                fingerprints[name] = tuple(poincare_coefficients(group, list(set(tup))))
        elif not hits:
            unclassified.append(tup)
        else:
            pending.append(tup)

    for tup in pending:
        fp = tuple(poincare_coefficients(group, list(set(tup))))
        hits = [n for n in first_pass[tup] if fingerprints.get(n) == fp]
        if len(hits) == 1:
            counts[hits[0]] += 1
        else:
            ambiguous.append((tup, first_pass[tup]))

    return {
        "counts": counts,
        "unclassified": unclassified,
        "ambiguous": ambiguous,
        "orbit_size": len(orbit),
    }


# -- rotation / braid-relation orbits on positive words ----------------------


def rotation_braid_orbits(words, presentation: Presentation):
    """
    Partition the given positive words by the equivalence generated by
    applying defining relations to subwords and by cyclic rotation.

    Equivalence classes may pass through intermediate words outside the
    input set; both moves preserve length, so the walk stays in the
    fixed-length word space.
    """
    rules: list[tuple[bytes, bytes]] = []
    for lhs, rhs in presentation.relations:
        bl = bytes(lhs)
        br = bytes(rhs)
        rules.append((bl, br))
        rules.append((br, bl))

    seeds = [bytes(w) for w in words]
    seen: dict[bytes, int] = {}
    orbits: list[list[bytes]] = []
    for seed in seeds:
        if seed in seen:
            continue
        oid = len(orbits)
        members = []
        queue = deque([seed])
        seen[seed] = oid
        while queue:
            w = queue.popleft()
            members.append(w)
            neighbors = []
            if w:
                neighbors.append(w[1:] + w[:1])
                neighbors.append(w[-1:] + w[:-1])
            for pat, rep in rules:
                start = w.find(pat)
                while start != -1:
                    neighbors.append(w[:start] + rep + w[start + len(pat) :])
                    start = w.find(pat, start + 1)
            for nb in neighbors:
                if nb not in seen:
                    seen[nb] = oid
                    queue.append(nb)
        orbits.append(members)
    # report orbits through their seed membership
    seed_set = set(seeds)
    partition: dict[int, list[bytes]] = {}
    for s in seed_set:
        partition.setdefault(seen[s], []).append(s)
    classes = [sorted(v) for _, v in sorted(partition.items())]
    return {
        "orbit_of": {bytes(w): seen[bytes(w)] for w in words},
        "classes": classes,
        "n_orbits": len(classes),
    }


def pi_word(presentation: Presentation, group: ReflectionGroup, images=None):
    """
    The word delta^h, whose image in W is the identity; h is the Coxeter
    number and delta the declared product of the presentation's generators.

    `images` gives the W-element index of each presentation letter; it
    defaults to the group's own generators.
    """
    h = group.coxeter_number
    word = presentation.delta * h
    if images is None:
        images = group.generator_indices
    img = 0
    for g in word:
        img = group.mul(img, images[g])
    if img != 0:
        raise ValueError("delta^h does not map to the identity; bad catalog data")
    return word
