"""Induced-subposet containment: embeddings and copy enumeration.

Containment always means an *induced* copy: an injective map that preserves
and reflects the strict order, so the image carries exactly the pattern's
order and nothing more.
"""

from __future__ import annotations

from .poset import Poset, iter_bits


def _backtrack(p: Poset, f: Poset, allowed: int, on_image):
    """Enumerate embeddings of f into the ``allowed`` part of p.

    Pattern elements are assigned in decreasing comparability degree so the
    most constrained ones fail first.  Candidates are pruned by up-set size,
    down-set size and height, all of which an embedding can only grow.
    ``on_image`` receives each complete image map and returns True to stop.
    """
    fn = f.n
    order = sorted(
        range(fn), key=lambda x: (-f.comparability[x].bit_count(), x)
    )
    p_up, p_down, f_up, f_down = p.up, p.down, f.up, f.down
    p_h, f_h = p.heights, f.heights
    up_need = [f_up[x].bit_count() for x in range(fn)]
    down_need = [f_down[x].bit_count() for x in range(fn)]
    image = [-1] * fn

    def rec(depth: int, used: int) -> bool:
        if depth == fn:
            return on_image(image)
        x = order[depth]
        for e in iter_bits(allowed & ~used):
            if (
                p_up[e].bit_count() < up_need[x]
                or p_down[e].bit_count() < down_need[x]
                or p_h[e] < f_h[x]
            ):
                continue
            ok = True
            for y in order[:depth]:
                m = image[y]
                if ((f_up[x] >> y) & 1) != ((p_up[e] >> m) & 1) or (
                    (f_down[x] >> y) & 1
                ) != ((p_down[e] >> m) & 1):
                    ok = False
                    break
            if ok:
                image[x] = e
                if rec(depth + 1, used | (1 << e)):
                    return True
                image[x] = -1
        return False

    rec(0, 0)


def find_embedding(p: Poset, f: Poset) -> tuple[int, ...] | None:
    """Some induced embedding of f into p as a tuple (f element -> p element), or None."""
    if f.n < 1:
        raise ValueError("pattern must have at least one element")
    found: list[tuple[int, ...]] = []

    def stop_at_first(image) -> bool:
        found.append(tuple(image))
        return True

    _backtrack(p, f, p.full_mask, stop_at_first)
    return found[0] if found else None


def enumerate_copies(p: Poset, f: Poset) -> tuple[tuple[int, ...], ...]:
    """All vertex sets of p inducing a copy of f, each once, sorted.

    Automorphic embeddings share an image, so images are deduplicated; the
    pattern must have at least two elements.
    """
    if f.n < 2:
        raise ValueError("copy enumeration requires a pattern with >= 2 elements")
    images: set[tuple[int, ...]] = set()

    def collect(image) -> bool:
        images.add(tuple(sorted(image)))
        return False

    _backtrack(p, f, p.full_mask, collect)
    return tuple(sorted(images))


def copy_masks(p: Poset, f: Poset) -> tuple[int, ...]:
    """enumerate_copies as bitmasks (same order)."""
    return tuple(
        sum(1 << v for v in copy) for copy in enumerate_copies(p, f)
    )


def is_F_free(p: Poset, s, f: Poset) -> bool:
    """True iff no copy of f lies inside the subset ``s`` of p's elements."""
    elements = set(s)
    if len(elements) < f.n:
        return True
    allowed = 0
    for e in elements:
        if not (0 <= e < p.n):
            raise IndexError(f"element {e} out of range for {p.n}")
        allowed |= 1 << e
    hit: list[bool] = []

    def stop(_image) -> bool:
        hit.append(True)
        return True

    _backtrack(p, f, allowed, stop)
    return not hit
