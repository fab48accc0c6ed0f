"""Colouring validation, the exact minimum-colour solver, and the
constructive colourings with their hypothesis predicates.

The constraint system is always the family of maximal F-free subsets with
more than one element: a colouring is valid when every such subset receives
at least two colours.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .families import FreeFamily, maximal_F_free
from .poset import Poset


class HypothesisError(Exception):
    """A constructive colouring was requested for a pattern outside its hypotheses."""


@dataclass(frozen=True)
class Colouring:
    """Total assignment element -> colour, colours 1..k."""

    colours: tuple[int, ...]
    k: int

    def __post_init__(self):
        if any(c < 1 or c > self.k for c in self.colours):
            raise ValueError(f"colours must lie in 1..{self.k}")


@dataclass(frozen=True)
class ChromaticResult:
    min_colours: int
    witness: Colouring
    family_size: int


@dataclass(frozen=True)
class HypothesisReport:
    """Which of the three registered theorems' hypotheses a pattern satisfies.

    theorem3: >= 2 minimals and every maximal has a non-minimal lower cover
              (bound 2); its dual form checks the dual pattern.
    theorem2: nonbounded with no isolated elements (bound 3).
    theorem1: bounded with no interior splitting elements (bound 10).
    """

    two_minimals: bool
    maximals_have_nonminimal_cover: bool
    thm3_applies: bool
    thm3_dual_applies: bool
    nonbounded: bool
    no_isolated: bool
    thm2_applies: bool
    bounded: bool
    no_interior_splitting: bool
    thm1_applies: bool


@dataclass(frozen=True)
class TheoremBound:
    bound: int
    source: str  # theorem3 | theorem3_dual | theorem2 | theorem1


def is_valid(p: Poset, f: Poset, colouring: Colouring) -> bool:
    """True iff every maximal F-free subset with > 1 element gets >= 2 colours."""
    if len(colouring.colours) != p.n:
        raise ValueError(f"colouring has {len(colouring.colours)} entries for {p.n} elements")
    return _family_valid(maximal_F_free(p, f, True), colouring.colours)


def _family_valid(family: FreeFamily, colours) -> bool:
    for members in family.sets:
        first = colours[members[0]]
        if all(colours[v] == first for v in members[1:]):
            return False
    return True


def _find_k_colouring(n: int, sets, k: int) -> tuple[int, ...] | None:
    """Lexicographically least valid k-colouring, or None.

    Elements are coloured in index order with colours tried ascending; a new
    colour c+1 may be opened only after c is in use, which prunes colour
    permutations without losing the lex-least witness (renaming colours by
    first use can only decrease a witness).  A constraint set is checked the
    moment its last element is coloured.
    """
    by_last = [[] for _ in range(n)]
    for s in sets:
        by_last[s[-1]].append(s)
    colours = [0] * n

    def rec(i: int, used: int) -> bool:
        if i == n:
            return True
        for c in range(1, min(k, used + 1) + 1):
            colours[i] = c
            ok = True
            for s in by_last[i]:
                first = colours[s[0]]
                if all(colours[v] == first for v in s[1:]):
                    ok = False
                    break
            if ok and rec(i + 1, max(used, c)):
                return True
        colours[i] = 0
        return False

    return tuple(colours) if rec(0, 0) else None


@lru_cache(maxsize=None)
def min_colours(p: Poset, f: Poset) -> ChromaticResult:
    """Exact minimum colour count with a lex-least witness.

    The minimum is 1 exactly when the filtered family is empty, and never
    exceeds |p| (an all-distinct colouring bicolours every constraint set).
    Refutation of k-1 colours is by exhausted canonical search.
    """
    family = maximal_F_free(p, f, True)
    n = p.n
    if not family.sets:
        return ChromaticResult(1, Colouring((1,) * n, 1), 0)
    for k in range(2, n + 1):
        witness = _find_k_colouring(n, family.sets, k)
        if witness is not None:
            return ChromaticResult(k, Colouring(witness, k), len(family.sets))
    raise AssertionError("all-distinct colouring must be valid")


# -- constructive colourings --------------------------------------------


def minimals_colouring(p: Poset) -> Colouring:
    """Minimals coloured 1, everything else 2.

    Valid against the 2-element antichain pattern for every p: a maximal
    chain with more than one element starts at a minimal and ends above it.
    """
    mins = p.minimals()
    return Colouring(tuple(1 if i in mins else 2 for i in range(p.n)), 2)


def theorem3_colouring(p: Poset, f: Poset) -> Colouring:
    """Two-colouring that is valid whenever f has >= 2 minimals and every
    maximal of f has a non-minimal lower cover.

    If p is an antichain it cannot contain f (f contains a 3-chain), and a
    surjective split (element 0 vs the rest) bicolours the single constraint
    set.  Otherwise the up-set of the least height-1 element is coloured 1
    and everything else 2: a monochromatic-1 maximal set would still be
    F-free with a minimal lower cover added (f has no minimum), and a
    monochromatic-2 one would need a copy of f whose maximal sits at height
    1, which the lower-cover condition forbids.
    """
    report = hypothesis_report(f)
    if not report.thm3_applies:
        raise HypothesisError(
            "pattern must have at least two minimals and every maximal "
            "must have a non-minimal lower cover"
        )
    if p.is_antichain():
        return Colouring((1,) + (2,) * (p.n - 1), 2)
    a = min(x for x in range(p.n) if p.heights[x] == 1)
    ups = p.up_set(a)
    return Colouring(tuple(1 if i in ups else 2 for i in range(p.n)), 2)


def theorem3_dual_colouring(p: Poset, f: Poset) -> Colouring:
    """Dual form: applies when the dual of f meets the theorem3 hypotheses.

    Maximal F-free subsets of p coincide with the maximal dual(F)-free
    subsets of dual(p) as vertex sets, so the colouring transfers unchanged.
    """
    dual_f = f.dual()
    if not hypothesis_report(dual_f).thm3_applies:
        raise HypothesisError(
            "dual pattern must have at least two minimals and every maximal "
            "must have a non-minimal lower cover"
        )
    return Colouring(theorem3_colouring(p.dual(), dual_f).colours, 2)


# -- hypothesis predicates ------------------------------------------------


def _thm3_conditions(f: Poset) -> tuple[bool, bool]:
    two_minimals = len(f.minimals()) >= 2
    minimal_mask = sum(1 << m for m in f.minimals())
    nonminimal_cover = all(
        any(not (minimal_mask >> b) & 1 for b in f.lower_covers(m))
        for m in f.maximals()
    )
    return two_minimals, nonminimal_cover


@lru_cache(maxsize=None)
def hypothesis_report(f: Poset) -> HypothesisReport:
    """Evaluate all three theorem hypotheses on a pattern poset."""
    if f.n < 2:
        raise ValueError("pattern must have >= 2 elements")
    two_minimals, nonminimal_cover = _thm3_conditions(f)
    dual_two, dual_cover = _thm3_conditions(f.dual())
    bounded = f.is_bounded()
    no_isolated = not f.isolated_elements()
    no_interior_splitting = not f.interior_splitting_elements()
    return HypothesisReport(
        two_minimals=two_minimals,
        maximals_have_nonminimal_cover=nonminimal_cover,
        thm3_applies=two_minimals and nonminimal_cover,
        thm3_dual_applies=dual_two and dual_cover,
        nonbounded=not bounded,
        no_isolated=no_isolated,
        thm2_applies=(not bounded) and no_isolated,
        bounded=bounded,
        no_interior_splitting=no_interior_splitting,
        thm1_applies=bounded and no_interior_splitting,
    )


def chi_ac_upper_from_theorems(f: Poset) -> TheoremBound | None:
    """Best upper bound any registered theorem yields for f, with its source."""
    report = hypothesis_report(f)
    candidates: list[TheoremBound] = []
    if report.thm3_applies:
        candidates.append(TheoremBound(2, "theorem3"))
    if report.thm3_dual_applies:
        candidates.append(TheoremBound(2, "theorem3_dual"))
    if report.thm2_applies:
        candidates.append(TheoremBound(3, "theorem2"))
    if report.thm1_applies:
        candidates.append(TheoremBound(10, "theorem1"))
    if not candidates:
        return None
    return min(candidates, key=lambda t: t.bound)
