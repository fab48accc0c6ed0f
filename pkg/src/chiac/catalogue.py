"""Small-poset catalogue, named registry, verification sweeps and reports.

The catalogue holds one canonical representative per isomorphism class,
generated by extending smaller posets with a new maximal element over every
order ideal.  Sweeps run the colouring machinery over the catalogue, back
results with a content-addressed JSON cache, and assemble the claims report
that `chiac verify-paper` writes out.
"""

from __future__ import annotations

import json
import logging
import math
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from itertools import product
from pathlib import Path

from .colouring import (
    ChromaticResult,
    Colouring,
    _family_valid,
    chi_ac_upper_from_theorems,
    hypothesis_report,
    is_valid,
    min_colours,
    minimals_colouring,
    theorem3_colouring,
    theorem3_dual_colouring,
)
from .families import maximal_F_free
from .poset import Poset, antichain, chain, fence, load_poset

log = logging.getLogger("chiac")

# Unlabelled finite posets by element count (published counting sequence).
UNLABELLED_POSET_COUNTS = {1: 1, 2: 2, 3: 5, 4: 16, 5: 63, 6: 318, 7: 2045, 8: 16999}

INTERIOR_SPLITTING_DEFINITION = (
    "interior splitting elements are taken to be the splitting elements "
    "that are neither the minimum nor the maximum of the poset"
)


class ResolveError(ValueError):
    """A poset specifier matched neither a file nor a known name."""


# -- named registry ------------------------------------------------------

_REGISTRY_COVERS: dict[str, tuple[int, tuple[tuple[int, int], ...]]] = {
    "chain2": (2, ((0, 1),)),
    "antichain2": (2, ()),
    "chain3": (3, ((0, 1), (1, 2))),
    "antichain3": (3, ()),
    "v3": (3, ((0, 1), (0, 2))),
    "lambda3": (3, ((0, 2), (1, 2))),
    "chain2_plus_point": (3, ((0, 1),)),
    "chain4": (4, ((0, 1), (1, 2), (2, 3))),
    "antichain4": (4, ()),
    "two_plus_two": (4, ((0, 1), (2, 3))),
    "chain2_plus_2points": (4, ((0, 1),)),
    "chain3_plus_point": (4, ((0, 1), (1, 2))),
    "claw_up": (4, ((0, 1), (0, 2), (0, 3))),
    "claw_down": (4, ((0, 3), (1, 3), (2, 3))),
    "n_poset": (4, ((0, 2), (1, 2), (1, 3))),
    "k22": (4, ((0, 2), (0, 3), (1, 2), (1, 3))),
    "diamond": (4, ((0, 1), (0, 2), (1, 3), (2, 3))),
    "y_up": (4, ((0, 2), (1, 2), (2, 3))),
    "y_down": (4, ((0, 1), (1, 2), (1, 3))),
    "chevron_up": (4, ((0, 1), (1, 3), (2, 3))),
    "chevron_down": (4, ((0, 1), (0, 2), (2, 3))),
    "v3_plus_point": (4, ((0, 1), (0, 2))),
    "lambda3_plus_point": (4, ((0, 2), (1, 2))),
}

_ALIASES = {"2plus2": "two_plus_two"}

THREE_ELEMENT_NAMES = ("chain3", "antichain3", "v3", "lambda3", "chain2_plus_point")
FOUR_ELEMENT_NAMES = (
    "chain4",
    "antichain4",
    "two_plus_two",
    "chain2_plus_2points",
    "chain3_plus_point",
    "claw_up",
    "claw_down",
    "n_poset",
    "k22",
    "diamond",
    "y_up",
    "y_down",
    "chevron_up",
    "chevron_down",
    "v3_plus_point",
    "lambda3_plus_point",
)

_PARAMETRIC = {"chain": chain, "antichain": antichain, "fence": fence}


def registry_names() -> tuple[str, ...]:
    return tuple(sorted(_REGISTRY_COVERS) + sorted(_ALIASES))


def named_poset(spec: str) -> Poset:
    """Build a poset from a registry name or a `family:n` parametric string."""
    base = _ALIASES.get(spec, spec)
    if ":" in base:
        kind, _, arg = base.partition(":")
        builder = _PARAMETRIC.get(kind)
        if builder is None:
            raise ResolveError(f"unknown poset family {kind!r} in {spec!r}")
        try:
            n = int(arg)
        except ValueError:
            raise ResolveError(f"poset size {arg!r} in {spec!r} is not an integer") from None
        if n < 1:
            raise ResolveError(f"poset size must be >= 1, got {n}")
        return builder(n)
    entry = _REGISTRY_COVERS.get(base)
    if entry is None:
        raise ResolveError(f"unknown poset name {spec!r}")
    n, pairs = entry
    return Poset.from_covers(n, pairs, name=base)


def resolve_poset(spec: str) -> Poset:
    """Resolve a CLI specifier: an existing file wins, otherwise a name.

    An explicit ``@file:`` prefix forces file interpretation.
    """
    if spec.startswith("@file:"):
        return load_poset(spec[len("@file:"):])
    path = Path(spec)
    if path.is_file():
        return load_poset(path)
    try:
        return named_poset(spec)
    except ResolveError:
        raise ResolveError(
            f"cannot resolve {spec!r}: no such file and no such poset name"
        ) from None


# -- catalogue generation --------------------------------------------------


@dataclass(frozen=True)
class PosetCatalogue:
    """One canonical representative per isomorphism class, in canonical order."""

    size: int
    members: tuple[Poset, ...]


_catalogue_cache: dict[int, PosetCatalogue] = {}
_minimal_extension_cache: dict[int, tuple[Poset, ...]] = {}


def _down_closed_masks(p: Poset) -> list[int]:
    """All order ideals of p as bitmasks (including empty and full)."""
    out = []
    for m in range(1 << p.n):
        mm = m
        ok = True
        while mm:
            low = mm & -mm
            if p.down[low.bit_length() - 1] & ~m:
                ok = False
                break
            mm ^= low
        if ok:
            out.append(m)
    return out


def _up_closed_masks(p: Poset) -> list[int]:
    out = []
    for m in range(1 << p.n):
        mm = m
        ok = True
        while mm:
            low = mm & -mm
            if p.up[low.bit_length() - 1] & ~m:
                ok = False
                break
            mm ^= low
        if ok:
            out.append(m)
    return out


def _extend_by_maximal(p: Poset, ideal: int) -> Poset:
    """Add a new top element above exactly the ideal (down-closure keeps it transitive)."""
    bit = 1 << p.n
    up = tuple((u | bit) if (ideal >> i) & 1 else u for i, u in enumerate(p.up))
    return Poset(p.n + 1, up + (0,))


def _extend_by_minimal(p: Poset, filt: int) -> Poset:
    """Add a new bottom element below exactly the filter."""
    return Poset(p.n + 1, p.up + (filt,))


def generate_all(n: int) -> PosetCatalogue:
    """All posets on n elements up to isomorphism.

    Every finite poset arises by deleting a maximal element, so extending
    each (n-1)-class by a new maximal over every order ideal is complete.
    Counts are cross-checked against the published sequence where known.
    """
    if n < 1:
        raise ValueError("catalogue size must be >= 1")
    cached = _catalogue_cache.get(n)
    if cached is not None:
        return cached
    if n > 8:
        log.warning("catalogue size %d is beyond the tested range; expect a long run", n)
    if n == 1:
        members: tuple[Poset, ...] = (Poset(1, (0,)),)
    else:
        prev = generate_all(n - 1)
        reps: dict[bytes, Poset] = {}
        for m in prev.members:
            for ideal in _down_closed_masks(m):
                q = _extend_by_maximal(m, ideal)
                key = q.canonical_form()
                if key not in reps:
                    reps[key] = q.canonical_relabelled()
        members = tuple(reps[k] for k in sorted(reps))
    expected = UNLABELLED_POSET_COUNTS.get(n)
    if expected is not None and len(members) != expected:
        raise RuntimeError(
            f"catalogue generation bug: {len(members)} classes at n={n}, "
            f"published count is {expected}"
        )
    catalogue = PosetCatalogue(n, members)
    _catalogue_cache[n] = catalogue
    return catalogue


def generate_all_by_minimal_extension(n: int) -> tuple[Poset, ...]:
    """Independent generation strategy: extend by a new minimal over every filter.

    Used to cross-check `generate_all`; deliberately skips the published-count
    assertion so the two routes stay independent.
    """
    if n < 1:
        raise ValueError("catalogue size must be >= 1")
    cached = _minimal_extension_cache.get(n)
    if cached is not None:
        return cached
    if n == 1:
        members: tuple[Poset, ...] = (Poset(1, (0,)),)
    else:
        reps: dict[bytes, Poset] = {}
        for m in generate_all_by_minimal_extension(n - 1):
            for filt in _up_closed_masks(m):
                q = _extend_by_minimal(m, filt)
                key = q.canonical_form()
                if key not in reps:
                    reps[key] = q.canonical_relabelled()
        members = tuple(reps[k] for k in sorted(reps))
    _minimal_extension_cache[n] = members
    return members


# -- result cache ----------------------------------------------------------


def _atomic_write_json(path: Path, obj) -> None:
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(json.dumps(obj, indent=2, sort_keys=True))
    os.replace(tmp, path)


def default_workspace() -> Path:
    """Directory holding cache/ and checkpoints/; CHIAC_CACHE_DIR overrides."""
    return Path(os.environ.get("CHIAC_CACHE_DIR", "."))


class ResultCache:
    """Content-addressed min_colours records: ``<root>/<F-fp>/<P-fp>.json``.

    Keys are canonical fingerprints, so isomorphic posets share records.  A
    witness colouring is labelling-dependent, so it is stored against the
    canonical labelling and permuted into the caller's labelling on read.
    Corrupted entries are logged and recomputed, never fatal.
    """

    def __init__(self, root):
        self.root = Path(root)

    def _path(self, p: Poset, f: Poset) -> Path:
        return self.root / f.fingerprint() / (p.fingerprint() + ".json")

    def get(self, p: Poset, f: Poset) -> ChromaticResult | None:
        path = self._path(p, f)
        try:
            raw = path.read_text()
        except OSError:
            return None
        try:
            rec = json.loads(raw)
            k = rec["min_colours"]
            fam = rec["family_size"]
            stored = rec["witness"]
            if not isinstance(k, int) or not isinstance(fam, int):
                raise ValueError("non-integer fields")
            if len(stored) != p.n or any(
                not isinstance(c, int) or c < 1 or c > k for c in stored
            ):
                raise ValueError("witness does not fit the poset")
        except (ValueError, KeyError, TypeError) as exc:
            log.warning("ignoring corrupted cache entry %s (%s); recomputing", path, exc)
            return None
        perm = p._canonical[0]
        colours = [0] * p.n
        for canon_index, element in enumerate(perm):
            colours[element] = stored[canon_index]
        return ChromaticResult(k, Colouring(tuple(colours), k), fam)

    def put(self, p: Poset, f: Poset, result: ChromaticResult) -> None:
        path = self._path(p, f)
        path.parent.mkdir(parents=True, exist_ok=True)
        perm = p._canonical[0]
        stored = [result.witness.colours[element] for element in perm]
        _atomic_write_json(
            path,
            {
                "min_colours": result.min_colours,
                "witness": stored,
                "family_size": result.family_size,
            },
        )


def min_colours_cached(p: Poset, f: Poset, cache: ResultCache | None = None) -> ChromaticResult:
    if cache is None:
        return min_colours(p, f)
    hit = cache.get(p, f)
    if hit is not None:
        return hit
    result = min_colours(p, f)
    cache.put(p, f, result)
    return result


def _map_ordered(fn, items, threads: int):
    if threads and threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, items))
    return [fn(item) for item in items]


# -- sweeps ------------------------------------------------------------


@dataclass(frozen=True)
class SweepReport:
    f_name: str
    bound_claimed: int
    n_max: int
    max_observed: int
    argmax: tuple[dict, ...]
    argmax_count: int
    checked: int
    per_size_seconds: dict
    passed: bool


def _sweep_values(f: Poset, n_max: int, cache=None, threads: int = 1):
    """min_colours over every catalogue member with 2 <= |P| <= n_max.

    Returns ([(size, poset, value), ...] in canonical order, {size: seconds}).
    """
    values = []
    timings = {}
    for size in range(2, n_max + 1):
        members = generate_all(size).members
        start = time.perf_counter()
        results = _map_ordered(
            lambda m: min_colours_cached(m, f, cache).min_colours, members, threads
        )
        timings[size] = round(time.perf_counter() - start, 6)
        values.extend(zip([size] * len(members), members, results))
    return values, timings


def verify_upper_bound(
    f: Poset, bound: int, n_max: int, cache: ResultCache | None = None, threads: int = 1
) -> SweepReport:
    """Check max over the catalogue of min_colours(P, f) against a claimed bound."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    values, timings = _sweep_values(f, n_max, cache, threads)
    max_observed = max(v for _, _, v in values)
    argmax = [(s, m) for s, m, v in values if v == max_observed]
    return SweepReport(
        f_name=f.name or f.fingerprint(),
        bound_claimed=bound,
        n_max=n_max,
        max_observed=max_observed,
        argmax=tuple(
            {"size": s, "fingerprint": m.fingerprint()} for s, m in argmax[:8]
        ),
        argmax_count=len(argmax),
        checked=len(values),
        per_size_seconds=timings,
        passed=max_observed <= bound,
    )


def _certify_no_smaller_colouring(p: Poset, f: Poset, k: int) -> bool:
    """Brute-force confirmation (independent of the solver's search) that no
    (k-1)-colouring of p is valid."""
    family = maximal_F_free(p, f, True)
    if not family.sets:
        return False
    for colours in product(range(1, k), repeat=p.n):
        if _family_valid(family, colours):
            return False
    return True


def search_lower_bound_witness(
    f: Poset,
    k: int,
    n_max: int,
    cache: ResultCache | None = None,
    checkpoint_dir=None,
    resume: bool = False,
    job_id: str | None = None,
) -> Poset | None:
    """Smallest catalogue poset needing at least k colours against f, if any.

    Scans sizes ascending in canonical order; any find is re-certified by
    exhausting all (k-1)^|P| colourings before being returned.  With a
    checkpoint directory the scan records the last fingerprint processed per
    size and can resume after the recorded position.
    """
    if k < 2:
        raise ValueError("colour threshold must be >= 2")
    job = job_id or f"witness-{f.fingerprint()}-k{k}"
    ck_path = Path(checkpoint_dir) / f"{job}.json" if checkpoint_dir else None
    state = {
        "job_id": job,
        "f_fingerprint": f.fingerprint(),
        "colours": k,
        "done_sizes": [],
        "last_fingerprint": {},
        "found": None,
    }
    if ck_path and resume and ck_path.is_file():
        try:
            loaded = json.loads(ck_path.read_text())
            if (
                loaded.get("f_fingerprint") == f.fingerprint()
                and loaded.get("colours") == k
            ):
                state = loaded
            else:
                log.warning("checkpoint %s belongs to a different job; starting fresh", ck_path)
        except (OSError, ValueError) as exc:
            log.warning("ignoring unreadable checkpoint %s (%s)", ck_path, exc)

    def save():
        if ck_path:
            ck_path.parent.mkdir(parents=True, exist_ok=True)
            _atomic_write_json(ck_path, state)

    if state["found"]:
        rec = state["found"]
        return Poset.from_covers(rec["size"], [tuple(c) for c in rec["covers"]])

    for size in range(2, n_max + 1):
        if size in state["done_sizes"]:
            continue
        resume_after = state["last_fingerprint"].get(str(size))
        processed = 0
        for member in generate_all(size).members:
            fp = member.fingerprint()
            if resume_after is not None and fp <= resume_after:
                continue
            result = min_colours_cached(member, f, cache)
            state["last_fingerprint"][str(size)] = fp
            processed += 1
            if result.min_colours >= k:
                if not _certify_no_smaller_colouring(member, f, k):
                    raise RuntimeError(
                        f"solver disagreement at {fp}: brute force found a {k - 1}-colouring"
                    )
                state["found"] = {
                    "size": size,
                    "fingerprint": fp,
                    "covers": member.covers(),
                    "min_colours": result.min_colours,
                }
                save()
                return member
            if processed % 64 == 0:
                save()
        state["done_sizes"].append(size)
        save()
    return None


THEOREM3_PATTERNS = (
    ("y_up", "direct"),
    ("chevron_up", "direct"),
    ("y_down", "dual"),
    ("chevron_down", "dual"),
)


def verify_theorem3(n_max: int, threads: int = 1) -> dict:
    """Mechanized check of the bound-2 construction over the whole catalogue.

    For every applicable pattern (and dual-route pattern) and every catalogue
    poset with 2 <= |P| <= n_max, the constructive 2-colouring must validate;
    additionally the value 2 must be attained by some P per pattern.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    families = {}
    total = 0
    for name, route in THEOREM3_PATTERNS:
        f = named_poset(name)
        construct = theorem3_colouring if route == "direct" else theorem3_dual_colouring
        failures = []
        checked = 0
        for size in range(2, n_max + 1):
            members = generate_all(size).members
            flags = _map_ordered(
                lambda m: is_valid(m, f, construct(m, f)), members, threads
            )
            for member, ok in zip(members, flags):
                checked += 1
                if not ok:
                    failures.append({"size": size, "fingerprint": member.fingerprint()})
        attained = None
        for size in range(2, n_max + 1):
            for member in generate_all(size).members:
                if min_colours(member, f).min_colours == 2:
                    attained = {"size": size, "fingerprint": member.fingerprint()}
                    break
            if attained:
                break
        families[name] = {
            "route": route,
            "checked": checked,
            "failures": failures,
            "two_attained": attained,
        }
        total += checked
    return {
        "max_size": n_max,
        "total_checked": total,
        "all_valid": all(not fam["failures"] for fam in families.values()),
        "two_attained_for_all": all(fam["two_attained"] for fam in families.values()),
        "families": families,
    }


def minimals_colouring_sweep(n_max: int) -> dict:
    """Validate the minimals-vs-rest 2-colouring against maximal chains everywhere."""
    pattern = antichain(2)
    failures = []
    checked = 0
    for size in range(2, n_max + 1):
        for member in generate_all(size).members:
            checked += 1
            if not is_valid(member, pattern, minimals_colouring(member)):
                failures.append({"size": size, "fingerprint": member.fingerprint()})
    lower = min_colours(chain(2), pattern).min_colours
    return {
        "max_size": n_max,
        "checked": checked,
        "failures": failures,
        "all_valid": not failures,
        "lower_bound_value": lower,
        "lower_bound_ok": lower == 2,
    }


def unboundedness_check(n: int, N: int) -> bool:
    """Both colour counts hit ceil(N/(n-2)): antichain-in-antichain and chain-in-chain."""
    if n < 3:
        raise ValueError("pattern size must be >= 3")
    if N < n:
        raise ValueError("ground size must be >= pattern size")
    expected = math.ceil(N / (n - 2))
    return (
        min_colours(antichain(N), antichain(n)).min_colours == expected
        and min_colours(chain(N), chain(n)).min_colours == expected
    )


def unboundedness_grid(max_pattern: int = 5, max_ground: int = 9) -> list[dict]:
    rows = []
    for n in range(3, max_pattern + 1):
        for N in range(n, max_ground + 1):
            expected = math.ceil(N / (n - 2))
            antichain_observed = min_colours(antichain(N), antichain(n)).min_colours
            chain_observed = min_colours(chain(N), chain(n)).min_colours
            rows.append(
                {
                    "f_size": n,
                    "p_size": N,
                    "expected": expected,
                    "antichain_observed": antichain_observed,
                    "chain_observed": chain_observed,
                    "antichain_ok": antichain_observed == expected,
                    "chain_ok": chain_observed == expected,
                    "ok": antichain_observed == expected == chain_observed,
                }
            )
    return rows


# -- claims table ---------------------------------------------------------


@dataclass(frozen=True)
class Claim:
    """One known-status row: what value or bound is on record for a pattern."""

    f_name: str
    size: int
    status: str  # "=k" | "<=k" | ">=k" | "unknown" | "infinite"
    source: str
    unbounded: tuple[str, int] | None = None  # ("chain"|"antichain", n) for infinite rows


CLAIMS: tuple[Claim, ...] = (
    Claim("antichain2", 2, "=2", "minimals_construction"),
    Claim("chain2", 2, "=3", "external"),
    Claim("chain3", 3, "infinite", "unbounded_family", ("chain", 3)),
    Claim("antichain3", 3, "infinite", "unbounded_family", ("antichain", 3)),
    Claim("v3", 3, "=3", "external"),
    Claim("lambda3", 3, "=3", "external"),
    Claim("chain2_plus_point", 3, ">=4", "external"),
    Claim("chain4", 4, "infinite", "unbounded_family", ("chain", 4)),
    Claim("antichain4", 4, "infinite", "unbounded_family", ("antichain", 4)),
    Claim("two_plus_two", 4, "=2", "external"),
    Claim("y_up", 4, "=2", "theorem3"),
    Claim("chevron_up", 4, "=2", "theorem3"),
    Claim("y_down", 4, "=2", "theorem3_dual"),
    Claim("chevron_down", 4, "=2", "theorem3_dual"),
    Claim("n_poset", 4, "<=3", "theorem2"),
    Claim("k22", 4, "<=3", "theorem2"),
    Claim("claw_up", 4, "<=3", "theorem2"),
    Claim("claw_down", 4, "<=3", "theorem2"),
    Claim("diamond", 4, "<=10", "theorem1"),
    Claim("chain2_plus_2points", 4, "unknown", "none"),
    Claim("chain3_plus_point", 4, "unknown", "none"),
    Claim("v3_plus_point", 4, "unknown", "none"),
    Claim("lambda3_plus_point", 4, "unknown", "none"),
)

WITNESS_SEARCH_TARGETS = (("chain2", 3), ("v3", 3), ("chain2_plus_point", 4))


def _claim_bound(status: str) -> int | None:
    if status.startswith("="):
        return int(status[1:])
    if status.startswith("<="):
        return int(status[2:])
    return None


def _evaluate_claim(claim: Claim, n_max: int, cache, threads, grid_ok) -> dict:
    f = named_poset(claim.f_name)
    values, _ = _sweep_values(f, n_max, cache, threads)
    swept_max = max(v for _, _, v in values)
    argmax = [(s, m) for s, m, v in values if v == swept_max]
    theorem = chi_ac_upper_from_theorems(f)
    row = {
        "f_name": claim.f_name,
        "f_size": claim.size,
        "status": claim.status,
        "source": claim.source,
        "hypotheses": asdict(hypothesis_report(f)),
        "theorem_bound": asdict(theorem) if theorem else None,
        "swept_max": swept_max,
        "checked": len(values),
        "argmax": [{"size": s, "fingerprint": m.fingerprint()} for s, m in argmax[:6]],
        "argmax_count": len(argmax),
        "exact_attained": None,
        "note": None,
    }
    bound = _claim_bound(claim.status)
    if claim.status == "infinite":
        assert claim.unbounded is not None
        ok = grid_ok.get(claim.unbounded, False)
        row["unboundedness_ok"] = ok
        row["verdict"] = "consistent" if ok else "inconsistent"
        row["note"] = "growth verified on the unboundedness grid"
    elif claim.status.startswith("="):
        row["exact_attained"] = swept_max == bound
        row["verdict"] = "consistent" if swept_max <= bound else "inconsistent"
        if swept_max < bound:
            row["note"] = (
                f"claimed exact value {bound} not attained within size {n_max} "
                "(attainment at desk scale is not required)"
            )
    elif claim.status.startswith("<="):
        row["verdict"] = "consistent" if swept_max <= bound else "inconsistent"
    elif claim.status.startswith(">="):
        threshold = int(claim.status[2:])
        row["verdict"] = "consistent"
        row["confirmed_at_desk_scale"] = swept_max >= threshold
        if swept_max < threshold:
            row["note"] = f"no witness reaching {threshold} within size {n_max} (none promised)"
    else:  # unknown
        row["verdict"] = "consistent"
        row["note"] = "no claimed value; swept maximum reported as data"
    return row


def paper_table(n_max: int, cache: ResultCache | None = None, threads: int = 1, _grid=None) -> dict:
    """Claims table for all 3- and 4-element patterns (plus the 2-element ones).

    Each row carries the hypothesis profile, any theorem bound, the swept
    maximum of min_colours over the catalogue, and a consistency verdict.
    """
    if n_max < 4:
        raise ValueError("claims table needs n_max >= 4")
    grid = _grid if _grid is not None else unboundedness_grid()
    grid_ok: dict[tuple[str, int], bool] = {}
    for row in grid:
        for kind in ("chain", "antichain"):
            key = (kind, row["f_size"])
            grid_ok[key] = grid_ok.get(key, True) and row[f"{kind}_ok"]
    claims = [
        _evaluate_claim(claim, n_max, cache, threads, grid_ok) for claim in CLAIMS
    ]
    return {
        "claims": claims,
        "interior_splitting_definition": INTERIOR_SPLITTING_DEFINITION,
    }


def verify_paper(
    n_max: int = 6,
    cache: ResultCache | None = None,
    threads: int = 1,
    checkpoint_dir=None,
    on_phase=None,
) -> dict:
    """Full verification report: claims, catalogue counts, constructive sweeps,
    unboundedness grid and witness searches."""
    if n_max < 4:
        raise ValueError("paper verification needs n_max >= 4")
    started = time.perf_counter()

    def phase(message: str):
        if on_phase:
            on_phase(message)

    phase(f"building catalogues up to size {n_max}")
    counts = {str(size): len(generate_all(size).members) for size in range(1, n_max + 1)}
    phase("checking the unboundedness grid")
    grid = unboundedness_grid()
    phase("sweeping the claims table")
    table = paper_table(n_max, cache=cache, threads=threads, _grid=grid)
    phase("running the mechanized bound-2 sweep")
    theorem3_sweep = verify_theorem3(n_max, threads=threads)
    phase("running the minimals-colouring sweep")
    minimals_sweep = minimals_colouring_sweep(n_max)
    phase("searching for lower-bound witnesses")
    searches = []
    for f_name, threshold in WITNESS_SEARCH_TARGETS:
        f = named_poset(f_name)
        witness = search_lower_bound_witness(
            f, threshold, n_max, cache=cache, checkpoint_dir=checkpoint_dir
        )
        searches.append(
            {
                "f_name": f_name,
                "colours": threshold,
                "max_size": n_max,
                "found": None
                if witness is None
                else {
                    "size": witness.n,
                    "fingerprint": witness.fingerprint(),
                    "covers": witness.covers(),
                    "certified": True,
                },
            }
        )
    consistent = (
        all(row["verdict"] == "consistent" for row in table["claims"])
        and theorem3_sweep["all_valid"]
        and theorem3_sweep["two_attained_for_all"]
        and minimals_sweep["all_valid"]
        and minimals_sweep["lower_bound_ok"]
        and all(row["ok"] for row in grid)
    )
    return {
        "claims": table["claims"],
        "catalogue_counts": counts,
        "theorem3_sweep": theorem3_sweep,
        "unboundedness": grid,
        "minimals_sweep": minimals_sweep,
        "witness_searches": searches,
        "interior_splitting_definition": table["interior_splitting_definition"],
        "max_size": n_max,
        "consistent": consistent,
        "elapsed_seconds": round(time.perf_counter() - started, 3),
    }


def inconsistencies(report: dict) -> list[str]:
    """Human-readable list of every failed verification in a report."""
    problems = []
    for row in report["claims"]:
        if row["verdict"] != "consistent":
            problems.append(
                f"claim {row['f_name']} ({row['status']}): swept max {row['swept_max']}"
                f" at {', '.join(a['fingerprint'] for a in row['argmax'])}"
            )
    sweep = report["theorem3_sweep"]
    for name, fam in sweep["families"].items():
        for failure in fam["failures"]:
            problems.append(
                f"bound-2 construction invalid for F={name} at P fingerprint "
                f"{failure['fingerprint']} (size {failure['size']})"
            )
        if not fam["two_attained"]:
            problems.append(f"bound-2 value never attained for F={name}")
    for row in report["unboundedness"]:
        if not row["ok"]:
            problems.append(
                f"unboundedness mismatch at pattern size {row['f_size']}, "
                f"ground size {row['p_size']}"
            )
    minimals = report["minimals_sweep"]
    for failure in minimals["failures"]:
        problems.append(
            f"minimals colouring invalid at P fingerprint {failure['fingerprint']}"
            f" (size {failure['size']})"
        )
    if not minimals["lower_bound_ok"]:
        problems.append("minimals colouring lower bound (2 on the 2-chain) not met")
    return problems
