"""Integer partitions, automorphism factors, and symmetric-group characters."""

from __future__ import annotations

from functools import lru_cache
from math import factorial

from .qfield import Q, QRat

class Partition:
    """An integer partition, stored as multiplicities with a parts view.

    ``mult`` maps a part size k to the number of parts equal to k; parts
    are the weakly decreasing tuple.  Instances are immutable and hashable.
    """

    __slots__ = ("parts", "_hash")

    def __init__(self, parts=()):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if parts and parts[-1] <= 0:
            raise ValueError("parts must be positive integers")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "_hash", hash(parts))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @staticmethod
    def from_mult(mult: dict) -> "Partition":
        parts = []
        for k, m in mult.items():
            if m < 0:
                raise ValueError("negative multiplicity")
            parts.extend([k] * m)
        return Partition(parts)

    @property
    def mult(self) -> dict:
        out: dict = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def add_part(self, k: int) -> "Partition":
        return Partition(self.parts + (k,))

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return sort_key(self) < sort_key(other)

    def __iter__(self):
        return iter(self.parts)

    def __repr__(self):
        return "Partition(%r)" % list(self.parts)

    def to_json(self):
        return list(self.parts)


EMPTY = Partition()


def sort_key(p: Partition):
    """Enumeration order: size-major, then parts-descending lexicographic."""
    return (p.size, tuple(-x for x in p.parts))


@lru_cache(maxsize=None)
def partitions_of(n: int):
    """All partitions of exactly n, in enumeration order."""
    if n < 0:
        return ()
    out = []

    def rec(remaining, cap, acc):
        if remaining == 0:
            out.append(Partition(acc))
            return
        for k in range(min(cap, remaining), 0, -1):
            rec(remaining - k, k, acc + (k,))

    rec(n, n if n else 0, ())
    return tuple(out) if n else (EMPTY,)


def enumerate_partitions(bound: int):
    """All partitions of every size <= bound, in deterministic order."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    out = []
    for n in range(bound + 1):
        out.extend(partitions_of(n))
    return out


def zfactor(p: Partition) -> int:
    """Automorphism count prod_k k^(p_k) * p_k! of the contact data p."""
    z = 1
    for k, m in p.mult.items():
        z *= k**m * factorial(m)
    return z


# ---------------------------------------------------------------------------
# Murnaghan-Nakayama characters via first-column hook (beta) numbers.
# ---------------------------------------------------------------------------

def _beta_set(p: Partition, length: int):
    parts = p.parts + (0,) * (length - len(p.parts))
    return tuple(parts[i] + (length - 1 - i) for i in range(length))

def _beta_to_partition(betas) -> Partition:
    betas = tuple(sorted(betas, reverse=True))
    L = len(betas)
    parts = [betas[i] - (L - 1 - i) for i in range(L)]
    return Partition([x for x in parts if x > 0])


@lru_cache(maxsize=None)
def _mn(lam_parts, mu_parts) -> int:
    if not mu_parts:
        return 1 if not lam_parts else 0
    lam = Partition(lam_parts)
    m = mu_parts[0]
    rest = mu_parts[1:]
    L = max(lam.length, 1)
    betas = set(_beta_set(lam, L))
    total = 0
    for b in sorted(betas, reverse=True):
        nb = b - m
        if nb < 0 or nb in betas:
            continue
        height = sum(1 for c in betas if nb < c < b)
        reduced = _beta_to_partition((betas - {b}) | {nb})
        total += (-1) ** height * _mn(reduced.parts, rest)
    return total


def character(lam: Partition, mu: Partition) -> int:
    """Symmetric-group character value chi^lam at the class of cycle type mu."""
    if lam.size != mu.size:
        raise ValueError("partitions must have equal size")
    return _mn(lam.parts, mu.parts)


def permutation_identity(m: int) -> QRat:
    """Signed sum over partitions of m weighted by 1/(prod mu_k! k^mu_k).

    Equals 1 for m = 1 and 0 for every m >= 2: the summands are the signed
    densities of the conjugacy classes of the symmetric group.
    """
    if m < 1:
        raise ValueError("m must be positive")
    total = Q(0)
    for p in partitions_of(m):
        sign = (-1) ** sum((k + 1) * mk for k, mk in p.mult.items())
        total += Q(sign, zfactor(p))
    return QRat.from_rational(total)
