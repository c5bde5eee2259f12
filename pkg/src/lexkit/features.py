"""Flat feature structures.

A :class:`FeatureStructure` is an ordered collection of ``name=value`` pairs in
which every name occurs at most once.  Order is kept so that serializers are
deterministic, but equality and hashing ignore it: two structures holding the
same pairs are equal.

    >>> fs = FeatureStructure([("cat", "noun"), ("case", "genitive")])
    >>> fs.get("case")
    'genitive'
    >>> fs == FeatureStructure([("case", "genitive"), ("cat", "noun")])
    True
"""

from __future__ import annotations

import unicodedata
from typing import Iterable, Iterator, Mapping, Optional, Tuple, Union

from lexkit.errors import DataError, LexkitError

Pair = Tuple[str, str]


class InvalidFeature(LexkitError, ValueError):
    pass


class DuplicateAttribute(DataError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"duplicate attribute {name!r}")


class FeatureConflict(DataError):
    def __init__(self, name: str, left: str, right: str):
        self.name = name
        self.left = left
        self.right = right
        super().__init__(f"conflicting values for {name!r}: {left!r} vs {right!r}")


def _is_control(ch: str) -> bool:
    return unicodedata.category(ch) in ("Cc", "Cf", "Cs", "Co", "Cn")


def check_name(name: str) -> str:
    if not isinstance(name, str) or not name:
        raise InvalidFeature(f"feature name must be a non-empty string, got {name!r}")
    name = unicodedata.normalize("NFC", name)
    if any(ch.isspace() or _is_control(ch) for ch in name):
        raise InvalidFeature(f"feature name {name!r} contains whitespace or control characters")
    return name


def check_value(value: str) -> str:
    if not isinstance(value, str) or not value:
        raise InvalidFeature(f"feature value must be a non-empty string, got {value!r}")
    value = unicodedata.normalize("NFC", value)
    # surrounding whitespace would not survive element-text serialization
    if value != value.strip():
        raise InvalidFeature(f"feature value {value!r} has surrounding whitespace")
    if any(_is_control(ch) for ch in value):
        raise InvalidFeature(f"feature value {value!r} contains control characters")
    return value


class FeatureStructure:
    """Immutable flat attribute/value structure."""

    __slots__ = ("_pairs", "_index")

    def __init__(self, pairs: Union[Iterable[Pair], Mapping[str, str], None] = None):
        if pairs is None:
            pairs = ()
        elif isinstance(pairs, Mapping):
            pairs = pairs.items()
        checked = []
        index = {}
        for name, value in pairs:
            name = check_name(name)
            value = check_value(value)
            if name in index:
                raise DuplicateAttribute(name)
            index[name] = value
            checked.append((name, value))
        self._pairs = tuple(checked)
        self._index = index

    def get(self, name: str) -> Optional[str]:
        return self._index.get(unicodedata.normalize("NFC", name))

    def __getitem__(self, name: str) -> str:
        return self._index[unicodedata.normalize("NFC", name)]

    def __contains__(self, name: object) -> bool:
        return isinstance(name, str) and unicodedata.normalize("NFC", name) in self._index

    def __iter__(self) -> Iterator[Pair]:
        return iter(self._pairs)

    def __len__(self) -> int:
        return len(self._pairs)

    def __bool__(self) -> bool:
        return bool(self._pairs)

    def names(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self._pairs)

    @property
    def pairs(self) -> Tuple[Pair, ...]:
        return self._pairs

    def merge(self, other: "FeatureStructure") -> "FeatureStructure":
        """Consistent union: own pairs first, then the novel pairs of ``other``.

        Raises :class:`FeatureConflict` if both sides carry a name with
        different values.
        """
        novel = []
        for name, value in other._pairs:
            mine = self._index.get(name)
            if mine is None:
                novel.append((name, value))
            elif mine != value:
                raise FeatureConflict(name, mine, value)
        if not novel:
            return self
        return FeatureStructure(self._pairs + tuple(novel))

    def subsumes(self, other: "FeatureStructure") -> bool:
        """True iff every pair of this structure also occurs in ``other``."""
        return all(other._index.get(name) == value for name, value in self._pairs)

    def without(self, *names: str) -> "FeatureStructure":
        drop = set(names)
        return FeatureStructure(p for p in self._pairs if p[0] not in drop)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FeatureStructure):
            return NotImplemented
        return self._index == other._index

    def __hash__(self) -> int:
        return hash(frozenset(self._pairs))

    def __str__(self) -> str:
        return "{" + ", ".join(f"{n}={v}" for n, v in self._pairs) + "}"

    def __repr__(self) -> str:
        return f"FeatureStructure({list(self._pairs)!r})"


EMPTY = FeatureStructure()


def fs(*pairs: Pair, **kwargs: str) -> FeatureStructure:
    """Shorthand constructor: ``fs(("cat", "noun"), number="singular")``."""
    return FeatureStructure(list(pairs) + list(kwargs.items()))
