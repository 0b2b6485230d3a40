"""Bounded search: which integers are sums of at most five platonic numbers.

The pool is the union of the five families' values up to a limit, with the
provenance of every value kept so a witness can be re-derived and checked
independently.  Reachability runs in layers over dense bitsets (Python
ints), one layer per additional term, so min-term counts are exact and the
whole scan is deterministic.  By default values may repeat inside a witness
(the five families are what must differ); strict-distinct mode forbids
repeated values.
"""

from __future__ import annotations

from bisect import bisect_right
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .sequences import PlatonicKind, platonic_value

#: Largest scan bound accepted before the dense bit tables get unreasonable.
DEFAULT_SCAN_CEILING = 100_000_000


@dataclass(frozen=True)
class PoolEntry:
    """One pool value and every (kind, index) pair that attains it."""

    value: int
    provenance: tuple[tuple[PlatonicKind, int], ...]


@dataclass(frozen=True)
class Witness:
    """A target written as a sum of pool values within the term budget."""

    target: int
    terms: tuple[PoolEntry, ...]

    @property
    def term_values(self) -> tuple[int, ...]:
        return tuple(entry.value for entry in self.terms)

    def to_json_dict(self) -> dict:
        return {
            "target": str(self.target),
            "min_terms": len(self.terms),
            "terms": [str(v) for v in self.term_values],
        }


@dataclass(frozen=True)
class ScanReport:
    """Aggregate outcome of a scan over [1, n]."""

    n: int
    max_terms: int
    strict_distinct: bool
    histogram: dict[int, int]
    failures: tuple[int, ...]
    witnesses: tuple[Witness, ...] | None = None

    def to_json_dict(self) -> dict:
        payload = {
            "n": self.n,
            "max_terms": self.max_terms,
            "strict_distinct": self.strict_distinct,
            "histogram": {str(k): v for k, v in self.histogram.items()},
            "failure_count": len(self.failures),
            "failures": [str(m) for m in self.failures],
        }
        if self.witnesses is not None:
            payload["witnesses"] = [w.to_json_dict() for w in self.witnesses]
        return payload


def platonic_pool(limit: int) -> list[PoolEntry]:
    """All platonic values in [1, limit], merged, sorted, with provenance."""
    if limit < 1:
        raise ValueError(f"pool limit must be >= 1, got {limit}")
    attained: dict[int, list[tuple[PlatonicKind, int]]] = {}
    for kind in PlatonicKind:
        n = 1
        while True:
            value = platonic_value(kind, n)
            if value > limit:
                break
            attained.setdefault(value, []).append((kind, n))
            n += 1
    return [
        PoolEntry(value=value, provenance=tuple(attained[value]))
        for value in sorted(attained)
    ]


def verify_witness(witness: Witness, max_terms: int = 5) -> bool:
    """Independently check a witness: term count, sum, and provenance.

    Every term value is re-derived from its claimed (kind, index) pairs, so
    a forged value can never pass no matter what the pool said.
    """
    if not 1 <= len(witness.terms) <= max_terms:
        return False
    if sum(entry.value for entry in witness.terms) != witness.target:
        return False
    for entry in witness.terms:
        if not entry.provenance:
            return False
        for kind, index in entry.provenance:
            if index < 1 or platonic_value(kind, index) != entry.value:
                return False
    return True


def witness_from_values(
    target: int, values: list[int] | tuple[int, ...], pool: list[PoolEntry]
) -> Witness:
    """Attach pool provenance to a plain value list, e.g. a reported sum."""
    by_value = {entry.value: entry for entry in pool}
    terms = []
    for value in values:
        if value not in by_value:
            raise ValueError(f"{value} is not a platonic value within the pool")
        terms.append(by_value[value])
    return Witness(target=target, terms=tuple(terms))


def _shifted_union(mask: int, values: list[int], workers: int) -> int:
    """Union of mask shifted by every pool value; order-independent."""
    if workers <= 1 or len(values) < 2 * workers:
        acc = 0
        for v in values:
            acc |= mask << v
        return acc
    chunks = [values[i::workers] for i in range(workers)]

    def chunk_union(chunk: list[int]) -> int:
        acc = 0
        for v in chunk:
            acc |= mask << v
        return acc

    with ThreadPoolExecutor(max_workers=workers) as executor:
        parts = list(executor.map(chunk_union, chunks))
    acc = 0
    for part in parts:
        acc |= part
    return acc


def _layer_masks(
    values: list[int],
    limit: int,
    max_terms: int,
    strict_distinct: bool,
    workers: int,
    stop_bit: int | None = None,
) -> list[int]:
    """Cumulative reachability masks; masks[k] = sums of at most k terms.

    Bit 0 stands for the empty sum.  With stop_bit set, layering stops as
    soon as that bit appears (single-target use).
    """
    full = (1 << (limit + 1)) - 1
    masks = [1]
    if strict_distinct:
        exact = [1] + [0] * max_terms
        for v in values:
            for k in range(max_terms, 0, -1):
                exact[k] = (exact[k] | (exact[k - 1] << v)) & full
        for k in range(1, max_terms + 1):
            masks.append(masks[k - 1] | exact[k])
            if stop_bit is not None and (masks[k] >> stop_bit) & 1:
                break
        return masks
    for k in range(1, max_terms + 1):
        previous = masks[k - 1]
        masks.append((previous | _shifted_union(previous, values, workers)) & full)
        if stop_bit is not None and (masks[k] >> stop_bit) & 1:
            break
    return masks


def _mask_bytes(mask: int, limit: int) -> bytes:
    return mask.to_bytes(limit // 8 + 1, "little")


def _has_bit(mask_bytes: bytes, index: int) -> int:
    return mask_bytes[index >> 3] & (1 << (index & 7))


def _recover_terms(
    target: int, depth: int, layer_bytes: list[bytes], values_asc: list[int]
) -> list[int]:
    """Walk back through the layers, largest feasible value first."""
    terms = []
    remaining = target
    for k in range(depth, 0, -1):
        previous = layer_bytes[k - 1]
        hi = bisect_right(values_asc, remaining)
        for i in range(hi - 1, -1, -1):
            v = values_asc[i]
            if _has_bit(previous, remaining - v):
                terms.append(v)
                remaining -= v
                break
        else:
            raise RuntimeError(
                f"no predecessor for {remaining} at layer {k}; masks corrupt"
            )
    return terms


def _recover_terms_strict(
    target: int, depth: int, values_desc: list[int]
) -> list[int] | None:
    """First decomposition into `depth` distinct values, descending order."""
    total = len(values_desc)
    prefix = [0]
    for v in values_desc:
        prefix.append(prefix[-1] + v)

    def search(remaining: int, need: int, start: int) -> list[int] | None:
        if need == 0:
            return [] if remaining == 0 else None
        for idx in range(start, total):
            v = values_desc[idx]
            if v > remaining:
                continue
            best = prefix[min(idx + need, total)] - prefix[idx]
            if best < remaining:
                return None
            rest = search(remaining - v, need - 1, idx + 1)
            if rest is not None:
                return [v, *rest]
        return None

    return search(target, depth, 0)


def min_term_decomposition(
    m: int,
    pool: list[PoolEntry],
    max_terms: int = 5,
    strict_distinct: bool = False,
) -> Witness | None:
    """Witness with the minimum possible term count, or None.

    The pool must contain every platonic value up to m (build it with
    limit >= m); None means no decomposition exists within the budget,
    which is a result, not an error.
    """
    if m < 1:
        raise ValueError(f"target must be >= 1, got {m}")
    if max_terms < 1:
        raise ValueError(f"term budget must be >= 1, got {max_terms}")
    values = [entry.value for entry in pool if entry.value <= m]
    if not values:
        return None
    masks = _layer_masks(values, m, max_terms, strict_distinct, 1, stop_bit=m)
    depth = len(masks) - 1
    if not (masks[depth] >> m) & 1:
        return None
    if strict_distinct:
        term_values = _recover_terms_strict(m, depth, values[::-1])
        if term_values is None:
            raise RuntimeError(f"strict recovery failed for {m}; masks corrupt")
    else:
        layer_bytes = [_mask_bytes(mask, m) for mask in masks]
        term_values = _recover_terms(m, depth, layer_bytes, values)
    by_value = {entry.value: entry for entry in pool}
    return Witness(target=m, terms=tuple(by_value[v] for v in term_values))


def scan_conjecture(
    n: int,
    max_terms: int = 5,
    keep_witnesses: bool = False,
    strict_distinct: bool = False,
    workers: int = 1,
    ceiling: int = DEFAULT_SCAN_CEILING,
) -> ScanReport:
    """Decide for every integer in [1, n] whether it decomposes in budget.

    Deterministic for fixed inputs regardless of worker count: layers are
    combined by unions, which are order-independent.
    """
    if n < 1:
        raise ValueError(f"scan bound must be >= 1, got {n}")
    if max_terms < 1:
        raise ValueError(f"term budget must be >= 1, got {max_terms}")
    if workers < 1:
        raise ValueError(f"worker count must be >= 1, got {workers}")
    if n > ceiling:
        raise ValueError(
            f"scan bound {n} exceeds the ceiling {ceiling}; "
            f"raise the ceiling explicitly if you really want this"
        )
    pool = platonic_pool(n)
    values = [entry.value for entry in pool]
    masks = _layer_masks(values, n, max_terms, strict_distinct, workers)
    histogram = {
        k: (masks[k] ^ masks[k - 1]).bit_count() for k in range(1, max_terms + 1)
    }
    final = _mask_bytes(masks[max_terms], n)
    failures = tuple(m for m in range(1, n + 1) if not _has_bit(final, m))
    witnesses: tuple[Witness, ...] | None = None
    if keep_witnesses:
        witnesses = tuple(
            _iter_witnesses_from_masks(n, masks, pool, strict_distinct)
        )
    return ScanReport(
        n=n,
        max_terms=max_terms,
        strict_distinct=strict_distinct,
        histogram=histogram,
        failures=failures,
        witnesses=witnesses,
    )


def iter_witnesses(
    n: int,
    max_terms: int = 5,
    strict_distinct: bool = False,
    workers: int = 1,
):
    """Yield a minimal witness for every representable m in [1, n]."""
    if n < 1:
        raise ValueError(f"scan bound must be >= 1, got {n}")
    pool = platonic_pool(n)
    values = [entry.value for entry in pool]
    masks = _layer_masks(values, n, max_terms, strict_distinct, workers)
    yield from _iter_witnesses_from_masks(n, masks, pool, strict_distinct)


def _iter_witnesses_from_masks(
    n: int,
    masks: list[int],
    pool: list[PoolEntry],
    strict_distinct: bool,
):
    max_terms = len(masks) - 1
    layer_bytes = [_mask_bytes(mask, n) for mask in masks]
    values_asc = [entry.value for entry in pool]
    by_value = {entry.value: entry for entry in pool}
    for m in range(1, n + 1):
        if not _has_bit(layer_bytes[max_terms], m):
            continue
        depth = next(
            k for k in range(1, max_terms + 1) if _has_bit(layer_bytes[k], m)
        )
        if strict_distinct:
            usable_desc = values_asc[: bisect_right(values_asc, m)][::-1]
            term_values = _recover_terms_strict(m, depth, usable_desc)
            if term_values is None:
                raise RuntimeError(f"strict recovery failed for {m}; masks corrupt")
        else:
            term_values = _recover_terms(m, depth, layer_bytes, values_asc)
        yield Witness(target=m, terms=tuple(by_value[v] for v in term_values))
