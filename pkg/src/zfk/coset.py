"""Canonical codes for hereditarily finite-or-cofinite sets.

A :class:`CoSet` is either ``Fin(S)``, the finite set of the codes in
``S``, or ``CoFin(S)``, the set of every code *not* in ``S``.  Supports are
kept duplicate free and sorted by a total code order, so two codes denote
the same set exactly when they are the same code.  Codes are interned: each
canonical code exists once per process, which makes equality and hashing
cheap without changing any observable behaviour.
"""

from __future__ import annotations

import json
import threading
from typing import Iterable

from .errors import ParseError

__all__ = [
    "CoSet",
    "make",
    "fin",
    "cofin",
    "canonicalize",
    "member",
    "equal",
    "complement",
    "rank",
    "is_founded",
    "is_antifounded",
    "subset",
    "encode",
    "decode",
    "EMPTY",
    "UNIVERSE",
]

_INTERN: dict = {}
_INTERN_LOCK = threading.Lock()


class CoSet:
    __slots__ = ("cofin", "support", "members", "rank", "key", "_hash", "_cache", "__weakref__")

    def __new__(cls, cofin: bool, support: tuple):
        # Only reached through _intern; support is already canonical.
        self = object.__new__(cls)
        self.cofin = cofin
        self.support = support
        self.members = frozenset(support)
        self.rank = 1 + max(x.rank for x in support) if support else 0
        self.key = (self.rank, int(cofin), tuple(x.key for x in support))
        self._hash = hash((cofin, support))
        self._cache = {}
        return self

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, CoSet):
            return NotImplemented
        return self.cofin == other.cofin and self.support == other.support

    def __hash__(self):
        return self._hash

    def __lt__(self, other: CoSet):
        return self.key < other.key

    def __le__(self, other: CoSet):
        return self.key <= other.key

    def __gt__(self, other: CoSet):
        return self.key > other.key

    def __ge__(self, other: CoSet):
        return self.key >= other.key

    def __contains__(self, y: CoSet) -> bool:
        return (y in self.members) != self.cofin

    def __reduce__(self):
        return (make, (self.cofin, self.support))

    def __setattr__(self, name, value):
        if name in ("_cache",) or not hasattr(self, "_hash"):
            object.__setattr__(self, name, value)
        else:
            raise AttributeError("CoSet is immutable")

    def __str__(self):
        if not self.support:
            return "V" if self.cofin else "0"
        body = ", ".join(str(x) for x in self.support)
        return ("co{" if self.cofin else "{") + body + "}"

    def __repr__(self):
        return f"CoSet({self})"

    @property
    def is_fin(self) -> bool:
        return not self.cofin


def _intern(cofin: bool, support: tuple) -> CoSet:
    k = (cofin, support)
    code = _INTERN.get(k)
    if code is None:
        with _INTERN_LOCK:
            code = _INTERN.get(k)
            if code is None:
                code = CoSet(cofin, support)
                _INTERN[k] = code
    return code


def make(cofin: bool, elements: Iterable[CoSet]) -> CoSet:
    """Build the canonical code with the given constructor and support."""
    support = tuple(sorted(set(elements)))
    return _intern(bool(cofin), support)


def fin(*elements: CoSet) -> CoSet:
    return make(False, elements)


def cofin(*elements: CoSet) -> CoSet:
    return make(True, elements)


EMPTY = fin()
UNIVERSE = cofin()


def canonicalize(raw) -> CoSet:
    """Turn a raw tree into a canonical code.

    ``raw`` is a :class:`CoSet` or a pair ``(tag, children)`` with ``tag``
    one of ``"fin"`` / ``"cofin"`` and ``children`` an iterable of raw trees.
    """
    if isinstance(raw, CoSet):
        return raw
    try:
        tag, children = raw
    except (TypeError, ValueError):
        raise TypeError(f"not a raw code tree: {raw!r}") from None
    if tag not in ("fin", "cofin"):
        raise TypeError(f"unknown constructor {tag!r}")
    return make(tag == "cofin", (canonicalize(c) for c in children))


def member(y: CoSet, a: CoSet) -> bool:
    return (y in a.members) != a.cofin


def equal(a: CoSet, b: CoSet) -> bool:
    return a == b


def complement(a: CoSet) -> CoSet:
    return _intern(not a.cofin, a.support)


def rank(a: CoSet) -> int:
    return a.rank


def is_founded(a: CoSet) -> bool:
    """Hereditarily Fin-coded; on this carrier these are the well-founded sets."""
    r = a._cache.get("founded")
    if r is None:
        r = not a.cofin and all(is_founded(x) for x in a.support)
        a._cache["founded"] = r
    return r


def is_antifounded(a: CoSet) -> bool:
    r = a._cache.get("antifounded")
    if r is None:
        r = a.cofin and all(is_antifounded(x) for x in a.support)
        a._cache["antifounded"] = r
    return r


def subset(y: CoSet, a: CoSet) -> bool:
    """Decide ``y ⊆ a`` by cases on the two constructors."""
    if not y.cofin:
        if not a.cofin:
            return y.members <= a.members
        return y.members.isdisjoint(a.members)
    if not a.cofin:
        # a cofinite set is never inside a finite one
        return False
    return a.members <= y.members


def _to_json(a: CoSet):
    return {"cofin" if a.cofin else "fin": [_to_json(x) for x in a.support]}


def encode(a: CoSet) -> str:
    return json.dumps(_to_json(a), separators=(",", ":"))


def _from_json(obj, path="$"):
    if not isinstance(obj, dict) or len(obj) != 1:
        raise ParseError(f"expected an object with one key at {path}")
    (tag, children), = obj.items()
    if tag not in ("fin", "cofin"):
        raise ParseError(f"unknown constructor {tag!r} at {path}")
    if not isinstance(children, list):
        raise ParseError(f"support must be an array at {path}")
    return make(tag == "cofin", (_from_json(c, f"{path}.{tag}[{i}]") for i, c in enumerate(children)))


def decode(text: str) -> CoSet:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed code: {exc.msg}", exc.pos) from None
    return _from_json(obj)
