"""Frequency vectors of cyclic windows, the projection and raising maps,
p-closeness, and the ultrametric distance they induce."""

from __future__ import annotations

import json
import math
from typing import Iterable, Mapping, Sequence

from .errors import DomainError
from .seqcore import CyclicSequence

# Below this size a serialized vector is written densely.
DENSE_SERIALIZATION_LIMIT = 4096


def word_index(window: Sequence[int], l: int) -> int:
    """1-based index of a length-p window: 1 + sum b_k * l^(p-k)."""
    if len(window) < 1:
        raise DomainError("window must be non-empty")
    v = 0
    for b in window:
        if not (0 <= b < l):
            raise DomainError(f"letter {b} out of range 0..{l - 1}")
        v = v * l + b
    return 1 + v


def index_word(j: int, p: int, l: int) -> tuple[int, ...]:
    """Window reconstructed from its 1-based index; inverse of word_index."""
    if not (1 <= j <= l**p):
        raise DomainError(f"index {j} out of range 1..{l}^{p}")
    v = j - 1
    word = []
    for _ in range(p):
        word.append(v % l)
        v //= l
    return tuple(reversed(word))


class FrequencyVector:
    """Counts of length-p cyclic windows of a length-n sequence.

    Stored sparsely as a map from 0-based window index to a positive count;
    entries sum to n. Level p = 0 is the single-entry vector [n].
    """

    __slots__ = ("p", "n", "l", "_counts")

    def __init__(self, p: int, n: int, l: int, counts: Mapping[int, int]):
        if p < 0 or n < 1 or l < 2:
            raise DomainError("need p >= 0, n >= 1, l >= 2")
        size = l**p
        cleaned: dict[int, int] = {}
        for j, c in counts.items():
            if c < 0:
                raise DomainError(f"negative count {c} at index {j}")
            if c == 0:
                continue
            if not (0 <= j < size):
                raise DomainError(f"index {j} out of range for l^p = {size}")
            cleaned[int(j)] = int(c)
        if sum(cleaned.values()) != n:
            raise DomainError(f"entries must sum to n = {n}")
        self.p = p
        self.n = n
        self.l = l
        self._counts = cleaned

    @classmethod
    def from_dense(cls, p: int, n: int, l: int, entries: Iterable[int]) -> "FrequencyVector":
        counts = {j: c for j, c in enumerate(entries) if c}
        return cls(p, n, l, counts)

    def entry(self, j: int) -> int:
        """Count at 0-based index j."""
        return self._counts.get(j, 0)

    def items(self):
        """Nonzero (0-based index, count) pairs in index order."""
        return sorted(self._counts.items())

    def dense(self) -> list[int]:
        out = [0] * (self.l**self.p)
        for j, c in self._counts.items():
            out[j] = c
        return out

    def key(self):
        return (self.p, self.n, self.l, tuple(self.items()))

    def __eq__(self, other):
        return isinstance(other, FrequencyVector) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"FrequencyVector(p={self.p}, n={self.n}, l={self.l}, {dict(self.items())})"

    def sort_key(self) -> tuple:
        """Deterministic ordering key: dense lexicographic."""
        return tuple(self.dense())

    def to_json(self) -> str:
        return json.dumps(self.to_obj())

    def to_obj(self) -> dict:
        obj: dict = {"p": self.p, "n": self.n, "l": self.l}
        if self.l**self.p <= DENSE_SERIALIZATION_LIMIT:
            obj["dense"] = self.dense()
        else:
            obj["sparse"] = {str(j + 1): c for j, c in self.items()}
        return obj

    @classmethod
    def from_obj(cls, obj: Mapping) -> "FrequencyVector":
        try:
            p, n, l = int(obj["p"]), int(obj["n"]), int(obj["l"])
        except KeyError as exc:
            raise DomainError(f"missing field {exc} in frequency-vector object")
        if "dense" in obj:
            return cls.from_dense(p, n, l, [int(c) for c in obj["dense"]])
        if "sparse" in obj:
            counts = {int(j) - 1: int(c) for j, c in obj["sparse"].items()}
            return cls(p, n, l, counts)
        raise DomainError("frequency-vector object needs 'dense' or 'sparse'")

    @classmethod
    def from_json(cls, text: str) -> "FrequencyVector":
        return cls.from_obj(json.loads(text))


def project(s: CyclicSequence, p: int) -> FrequencyVector:
    """Frequency vector of the length-p cyclic windows of s.

    Implemented by sliding a cyclic window; p = 0 gives [n].
    """
    n, l = s.n, s.l
    if p < 0 or p > n:
        raise DomainError(f"projection level must satisfy 0 <= p <= n = {n}")
    if p == 0:
        return FrequencyVector(0, n, l, {0: n})
    counts: dict[int, int] = {}
    size = l**p
    # Rolling window: index of window starting at i, as a base-l number.
    v = 0
    for k in range(p):
        v = v * l + s.symbols[k % n]
    top = l ** (p - 1)
    for i in range(n):
        counts[v] = counts.get(v, 0) + 1
        v = (v - s.symbols[i % n] * top) * l + s.symbols[(i + p) % n]
    return FrequencyVector(p, n, l, counts)


def raise_level(x: FrequencyVector) -> FrequencyVector:
    """Raising map: block sums of l consecutive entries, level p+1 -> p."""
    if x.p < 1:
        raise DomainError("cannot raise below level 0")
    counts: dict[int, int] = {}
    for j, c in x.items():
        parent = j // x.l
        counts[parent] = counts.get(parent, 0) + c
    return FrequencyVector(x.p - 1, x.n, x.l, counts)


def _check_compatible(a: CyclicSequence, b: CyclicSequence):
    if a.n != b.n or a.l != b.l:
        raise DomainError("sequences must share length and alphabet")


def p_close(a: CyclicSequence, b: CyclicSequence, p: int) -> bool:
    """True iff a and b have identical length-p window counts."""
    _check_compatible(a, b)
    return project(a, p) == project(b, p)


def gamma_max(a: CyclicSequence, b: CyclicSequence) -> int:
    """Largest p in 0..n-1 with a p-close to b (0 always qualifies)."""
    _check_compatible(a, b)
    if a == b:
        raise DomainError("gamma_max requires distinct sequences")
    for p in range(a.n - 1, -1, -1):
        if project(a, p) == project(b, p):
            return p
    raise AssertionError("level 0 projections always coincide")


def ultrametric_distance(a: CyclicSequence, b: CyclicSequence) -> float:
    """d(a, b) = exp(-gamma_max); 0 when a == b."""
    _check_compatible(a, b)
    if a == b:
        return 0.0
    return math.exp(-gamma_max(a, b))
