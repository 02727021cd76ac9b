"""Brute-force reference implementations, independent of the package internals.

Codes are plain tuples ``(cofin: bool, frozenset_of_codes)``.  Nothing here
imports from ``zfk`` except the two conversion helpers, which only read the
public ``cofin``/``support`` fields.
"""

from itertools import combinations

EMPTY = (False, frozenset())
UNIVERSE = (True, frozenset())


def from_coset(a):
    return (a.cofin, frozenset(from_coset(x) for x in a.support))


def to_coset(o):
    from zfk import make

    return make(o[0], (to_coset(x) for x in o[1]))


def rank(o):
    return 0 if not o[1] else 1 + max(rank(x) for x in o[1])


def width(o):
    return max([len(o[1])] + [width(x) for x in o[1]])


def member(y, a):
    return (y in a[1]) != a[0]


def complement(a):
    return (not a[0], a[1])


def supplement(a):
    return (not a[0], frozenset(supplement(x) for x in a[1]))


def fresh(*codes):
    """A code outside every given support: one rank above all of them."""
    pool = set()
    for c in codes:
        pool |= c[1]
        pool.add(c)
    return (False, frozenset(pool))


def reify(pred, relevant):
    """The code of ``{y : pred(y)}``, assuming ``pred`` is uniform off ``relevant``."""
    relevant = set(relevant)
    f = fresh(*relevant) if relevant else (False, frozenset({EMPTY, UNIVERSE}))
    if pred(f):
        return (True, frozenset(y for y in relevant if not pred(y)))
    return (False, frozenset(y for y in relevant if pred(y)))


def subset(y, a):
    """``∀z. z ∈ y → z ∈ a``, checked on both supports and one outsider."""
    zs = set(y[1]) | set(a[1])
    zs.add(fresh(y, a))
    return all(member(z, a) for z in zs if member(z, y))


def union(a, b):
    return reify(lambda y: member(y, a) or member(y, b), a[1] | b[1])


def intersection(a, b):
    return reify(lambda y: member(y, a) and member(y, b), a[1] | b[1])


def pair(a, b):
    return reify(lambda y: y == a or y == b, {a, b})


def pair_exclusion(a, b):
    return reify(lambda y: y != a and y != b, {a, b})


def opair(a, b):
    return pair(pair(a, a), pair(a, b))


def richard_fin(a):
    """Non-subsets of a finite ``a``: everything except the finitely many subsets."""
    assert not a[0]
    subs = [(False, frozenset(c)) for k in range(len(a[1]) + 1) for c in combinations(a[1], k)]
    return (True, frozenset(subs))


def is_founded(a):
    return not a[0] and all(is_founded(x) for x in a[1])


def is_antifounded(a):
    return a[0] and all(is_antifounded(x) for x in a[1])


def universe_by_closure(rank_bound, width_bound):
    """Fixpoint closure: keep adding codes built from known ones until nothing new fits."""
    known = {EMPTY, UNIVERSE}
    while True:
        new = set()
        items = sorted(known, key=repr)
        for k in range(width_bound + 1):
            for c in combinations(items, k):
                for cf in (False, True):
                    o = (cf, frozenset(c))
                    if o not in known and rank(o) <= rank_bound:
                        new.add(o)
        if not new:
            return known
        known |= new


def is_finite_ordinal(y):
    """Finite ordinals built by successor from 0, compared structurally."""
    n = EMPTY
    for _ in range(rank(y) + 1):
        if n == y:
            return True
        n = (False, n[1] | {n})
    return False
