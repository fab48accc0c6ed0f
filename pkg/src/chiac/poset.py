"""Finite posets on dense integer elements, with bitmask internals.

Elements are always ``0..n-1``; the strict order is held as per-element
bitmasks (``up[i]`` = elements strictly above ``i``), which keeps subset
handling, duality and isomorphism checks cheap at the sizes this package
targets (n <= 10 or so).  Labels are presentation-only: structural equality
and hashing ignore ``name``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path


class CycleError(ValueError):
    """Raised when requested relations would force an element below itself."""


class PosetParseError(ValueError):
    """Malformed poset text; the message carries source name and line number."""

    def __init__(self, message: str, source: str = "<string>", line: int | None = None):
        where = source if line is None else f"{source}:{line}"
        super().__init__(f"{where}: {message}")
        self.source = source
        self.line = line


def iter_bits(mask: int):
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Poset:
    """An immutable finite strict partial order on elements ``0..n-1``.

    ``up[i]`` is the bitmask of elements strictly above ``i``.  The
    constructor checks irreflexivity, antisymmetry and transitivity, so a
    ``Poset`` instance is always a valid partial order.
    """

    n: int
    up: tuple[int, ...]
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        n, up = self.n, self.up
        if n < 1:
            raise ValueError("a poset needs at least one element")
        if len(up) != n:
            raise ValueError(f"expected {n} up-masks, got {len(up)}")
        full = (1 << n) - 1
        for i, mask in enumerate(up):
            if mask & ~full:
                raise IndexError(f"up-mask of element {i} mentions elements >= {n}")
            if (mask >> i) & 1:
                raise CycleError(f"element {i} lies strictly below itself")
        for i in range(n):
            for j in iter_bits(up[i]):
                if (up[j] >> i) & 1:
                    raise CycleError(f"elements {i} and {j} lie below each other")
                if up[j] & ~up[i]:
                    raise ValueError(f"order is not transitive at {i} < {j}")

    # -- construction -------------------------------------------------

    @classmethod
    def from_covers(cls, n: int, pairs, name: str | None = None) -> "Poset":
        """Build the transitive closure of ``pairs`` as a poset.

        ``pairs`` need not be actual cover pairs; any acyclic relation is
        accepted and closed.  Raises CycleError if the closure would put an
        element below itself, IndexError on out-of-range indices.
        """
        if n < 1:
            raise ValueError("a poset needs at least one element")
        up = [0] * n
        for i, j in pairs:
            if not (0 <= i < n and 0 <= j < n):
                raise IndexError(f"pair ({i}, {j}) out of range for {n} elements")
            if i == j:
                raise CycleError(f"element {i} cannot lie below itself")
            up[i] |= 1 << j
        for k in range(n):
            bit_k = 1 << k
            for i in range(n):
                if up[i] & bit_k:
                    up[i] |= up[k]
        for i in range(n):
            if (up[i] >> i) & 1:
                raise CycleError(f"relation pairs force a cycle through element {i}")
        return cls(n, tuple(up), name=name)

    # -- derived structure --------------------------------------------

    @cached_property
    def down(self) -> tuple[int, ...]:
        """``down[i]`` = bitmask of elements strictly below ``i``."""
        down = [0] * self.n
        for i in range(self.n):
            for j in iter_bits(self.up[i]):
                down[j] |= 1 << i
        return tuple(down)

    @cached_property
    def comparability(self) -> tuple[int, ...]:
        """``comparability[i]`` = bitmask of elements comparable to ``i``."""
        return tuple(u | d for u, d in zip(self.up, self.down))

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """Height of every element: longest chain (edge count) up from a minimal."""
        h = [0] * self.n
        for x in sorted(range(self.n), key=lambda i: self.down[i].bit_count()):
            if self.down[x]:
                h[x] = 1 + max(h[y] for y in iter_bits(self.down[x]))
        return tuple(h)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    # -- queries -------------------------------------------------------

    def lt(self, i: int, j: int) -> bool:
        return bool((self.up[i] >> j) & 1)

    def comparable(self, i: int, j: int) -> bool:
        return i != j and bool((self.comparability[i] >> j) & 1)

    def covers(self) -> list[tuple[int, int]]:
        """Cover pairs (transitive reduction), sorted."""
        return [
            (i, j)
            for i in range(self.n)
            for j in iter_bits(self.up[i])
            if not (self.up[i] & self.down[j])
        ]

    def upper_covers(self, i: int) -> list[int]:
        return [j for j in iter_bits(self.up[i]) if not (self.up[i] & self.down[j])]

    def lower_covers(self, j: int) -> list[int]:
        return [i for i in iter_bits(self.down[j]) if not (self.up[i] & self.down[j])]

    def minimals(self) -> frozenset[int]:
        return frozenset(i for i in range(self.n) if not self.down[i])

    def maximals(self) -> frozenset[int]:
        return frozenset(i for i in range(self.n) if not self.up[i])

    def up_set(self, a: int) -> frozenset[int]:
        """All elements >= a."""
        return frozenset([a, *iter_bits(self.up[a])])

    def down_set(self, a: int) -> frozenset[int]:
        """All elements <= a."""
        return frozenset([a, *iter_bits(self.down[a])])

    def height(self, x: int) -> int:
        return self.heights[x]

    def minimum(self) -> int | None:
        mins = self.minimals()
        if len(mins) == 1:
            (m,) = mins
            return m
        return None

    def maximum(self) -> int | None:
        maxs = self.maximals()
        if len(maxs) == 1:
            (m,) = maxs
            return m
        return None

    def is_bounded(self) -> bool:
        """True iff the poset has both a minimum and a maximum element."""
        return self.minimum() is not None and self.maximum() is not None

    def is_antichain(self) -> bool:
        return not any(self.up)

    def isolated_elements(self) -> frozenset[int]:
        """Elements comparable to no other element."""
        return frozenset(i for i in range(self.n) if not self.comparability[i])

    def splitting_elements(self) -> frozenset[int]:
        """Elements comparable to every other element."""
        full = self.full_mask
        return frozenset(
            i for i in range(self.n) if self.comparability[i] == full ^ (1 << i)
        )

    def interior_splitting_elements(self) -> frozenset[int]:
        """Splitting elements that are neither the minimum nor the maximum.

        A splitting element with empty down-set is the minimum (it is
        comparable to, hence below, everything else); dually for the maximum.
        """
        return frozenset(
            i for i in self.splitting_elements() if self.down[i] and self.up[i]
        )

    # -- transformations -----------------------------------------------

    def dual(self) -> "Poset":
        """Same elements with the order reversed."""
        return Poset(self.n, self.down)

    def permuted(self, perm) -> "Poset":
        """Relabel: new element ``i`` plays the role of old element ``perm[i]``."""
        inv = [0] * self.n
        for new, old in enumerate(perm):
            inv[old] = new
        up = [0] * self.n
        for new, old in enumerate(perm):
            for j in iter_bits(self.up[old]):
                up[new] |= 1 << inv[j]
        return Poset(self.n, tuple(up))

    def induced(self, elements) -> "Poset":
        """Subposet induced on ``elements`` (relabelled 0..k-1 in sorted order)."""
        elems = sorted(set(elements))
        if elems and not (0 <= elems[0] and elems[-1] < self.n):
            raise IndexError(f"elements {elems} out of range for {self.n}")
        index = {e: i for i, e in enumerate(elems)}
        up = [0] * len(elems)
        for i, e in enumerate(elems):
            for j in iter_bits(self.up[e]):
                if j in index:
                    up[i] |= 1 << index[j]
        return Poset(len(elems), tuple(up))

    def disjoint_union(self, other: "Poset", name: str | None = None) -> "Poset":
        """Side-by-side union with no cross relations."""
        shift = self.n
        up = list(self.up) + [m << shift for m in other.up]
        return Poset(self.n + other.n, tuple(up), name=name)

    # -- canonical forms -----------------------------------------------

    @cached_property
    def _canonical(self) -> tuple[tuple[int, ...], bytes]:
        """(permutation, fingerprint bytes) of the canonical relabelling.

        The fingerprint is the lexicographically least incremental matrix
        encoding over all relabellings, found by a layered search that keeps
        only prefixes achieving the globally minimal next segment.  Candidates
        with identical (up, down) masks are interchangeable (swapping them is
        an automorphism), so only the lowest-indexed one per signature is
        explored.
        """
        n, up, down = self.n, self.up, self.down
        if n > 16:
            raise NotImplementedError("canonical forms support up to 16 elements")
        if n == 1:
            return (0,), bytes([1])

        def twin_reps(candidates: int) -> list[int]:
            reps, seen = [], set()
            for i in iter_bits(candidates):
                key = (up[i], down[i])
                if key not in seen:
                    seen.add(key)
                    reps.append(i)
            return reps

        full = self.full_mask
        frontier = [((i,), full ^ (1 << i)) for i in twin_reps(full)]
        segments = []
        for _depth in range(1, n):
            best = None
            kept = []
            for perm, remaining in frontier:
                for c in twin_reps(remaining):
                    seg = 0
                    for prev in perm:
                        seg = (seg << 2) | (((up[prev] >> c) & 1) << 1) | ((down[prev] >> c) & 1)
                    if best is None or seg < best:
                        best = seg
                        kept = [(perm + (c,), remaining ^ (1 << c))]
                    elif seg == best:
                        kept.append((perm + (c,), remaining ^ (1 << c)))
            segments.append(best)
            frontier = kept
        perm = frontier[0][0]
        encoding = bytes([n]) + b"".join(s.to_bytes(4, "big") for s in segments)
        return perm, encoding

    def canonical_form(self) -> bytes:
        """Total-order-comparable fingerprint; equal iff posets are isomorphic."""
        return self._canonical[1]

    def fingerprint(self) -> str:
        """Hex rendering of the canonical form, used for file names."""
        return self.canonical_form().hex()

    def canonical_relabelled(self) -> "Poset":
        """The canonical representative of this poset's isomorphism class."""
        return self.permuted(self._canonical[0])

    def is_isomorphic(self, other: "Poset") -> bool:
        return self.canonical_form() == other.canonical_form()

    def __repr__(self):
        label = f", name={self.name!r}" if self.name else ""
        return f"Poset({self.n}, covers={self.covers()!r}{label})"


# -- stock families ----------------------------------------------------


def chain(n: int, name: str | None = None) -> Poset:
    """Total order 0 < 1 < ... < n-1."""
    return Poset.from_covers(n, [(i, i + 1) for i in range(n - 1)], name=name or f"chain:{n}")


def antichain(n: int, name: str | None = None) -> Poset:
    """n pairwise-incomparable elements."""
    return Poset.from_covers(n, [], name=name or f"antichain:{n}")


def fence(n: int, name: str | None = None) -> Poset:
    """Zigzag 0 < 1 > 2 < 3 > ... on n elements."""
    pairs = [(i, i + 1) if i % 2 == 0 else (i + 1, i) for i in range(n - 1)]
    return Poset.from_covers(n, pairs, name=name or f"fence:{n}")


# -- text format --------------------------------------------------------
#
#   poset <name>      (header line optional; name optional)
#   elements <n>
#   covers
#   <i> <j>           (one pair per line; blank lines and # comments ignored)


def parse_poset(text: str, source: str = "<string>") -> Poset:
    name: str | None = None
    n: int | None = None
    pairs: list[tuple[int, int]] = []
    stage = "header"
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if stage == "header":
            stage = "elements"
            if tokens[0] == "poset":
                if len(tokens) > 2:
                    raise PosetParseError("'poset' header takes at most one name", source, lineno)
                if len(tokens) == 2:
                    name = tokens[1]
                continue
        if stage == "elements":
            if tokens[0] != "elements" or len(tokens) != 2:
                raise PosetParseError("expected 'elements <n>'", source, lineno)
            try:
                n = int(tokens[1])
            except ValueError:
                raise PosetParseError(f"element count {tokens[1]!r} is not an integer", source, lineno) from None
            if n < 1:
                raise PosetParseError("element count must be >= 1", source, lineno)
            stage = "covers"
            continue
        if stage == "covers":
            if tokens != ["covers"]:
                raise PosetParseError("expected 'covers'", source, lineno)
            stage = "pairs"
            continue
        if len(tokens) != 2:
            raise PosetParseError("expected cover pair '<i> <j>'", source, lineno)
        try:
            i, j = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise PosetParseError(f"cover pair {line!r} is not a pair of integers", source, lineno) from None
        assert n is not None
        if not (0 <= i < n and 0 <= j < n):
            raise PosetParseError(f"cover pair ({i}, {j}) out of range for {n} elements", source, lineno)
        pairs.append((i, j))
    if stage in ("header", "elements"):
        raise PosetParseError("missing 'elements <n>' header", source)
    if stage == "covers":
        raise PosetParseError("missing 'covers' header", source)
    assert n is not None
    return Poset.from_covers(n, pairs, name=name)


def format_poset(p: Poset) -> str:
    lines = [f"poset {p.name}" if p.name else "poset"]
    lines.append(f"elements {p.n}")
    lines.append("covers")
    lines.extend(f"{i} {j}" for i, j in p.covers())
    return "\n".join(lines) + "\n"


def load_poset(path) -> Poset:
    path = Path(path)
    return parse_poset(path.read_text(), source=str(path))
