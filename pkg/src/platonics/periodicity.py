"""Modular periods of the platonic sequences: closed form vs. observed.

Each family has a proven period modulo d given by a small case split on d.
The closed form is a period, but not necessarily the minimal one, so the
empirical detector searches the divisors of the closed form in ascending
order and reports the smallest shift that actually repeats.  A report where
the two disagree is a legitimate finding, not an error; an error is raised
only if the closed form fails to be a period at all, which would contradict
the congruence argument behind it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .sequences import PlatonicKind, platonic_value


class PeriodConsistencyError(RuntimeError):
    """The proven period failed to repeat; surfaced loudly, never patched."""


@dataclass(frozen=True)
class ResidueSequence:
    """Residues of one family's values modulo d, indices from 1."""

    kind: PlatonicKind
    modulus: int
    residues: tuple[int, ...]


@dataclass(frozen=True)
class PeriodReport:
    """Closed-form period next to the observed minimal period."""

    kind: PlatonicKind
    modulus: int
    closed_form: int
    empirical: int
    agrees: bool

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "d": self.modulus,
            "closed_form": self.closed_form,
            "empirical": self.empirical,
            "agrees": self.agrees,
        }


def _require_modulus(d: int) -> None:
    if d < 2:
        raise ValueError(f"modulus must be >= 2, got {d}")


def closed_form_period(kind: PlatonicKind, d: int) -> int:
    """Proven period of the family modulo d."""
    _require_modulus(d)
    if kind is PlatonicKind.TETRAHEDRAL:
        if d % 2 == 0:
            return 6 * d if d % 3 == 0 else 2 * d
        return 3 * d if d % 3 == 0 else d
    if kind is PlatonicKind.OCTAHEDRAL:
        return 3 * d if d % 3 == 0 else d
    if kind is PlatonicKind.CUBE:
        return d
    # Icosahedral and dodecahedral share the same case split.
    return 2 * d if d % 2 == 0 else d


def residue_sequence(kind: PlatonicKind, d: int, count: int) -> ResidueSequence:
    """Residues of the values at indices 1..count, reduced into [0, d)."""
    _require_modulus(d)
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    residues = tuple(platonic_value(kind, n) % d for n in range(1, count + 1))
    return ResidueSequence(kind=kind, modulus=d, residues=residues)


def _divisors(n: int) -> list[int]:
    small: list[int] = []
    large: list[int] = []
    f = 1
    while f * f <= n:
        if n % f == 0:
            small.append(f)
            if f != n // f:
                large.append(n // f)
        f += 1
    return small + large[::-1]


def empirical_period(kind: PlatonicKind, d: int) -> int:
    """Smallest shift under which the residues repeat.

    The minimal period of a purely periodic sequence divides every period,
    and the closed form is proven to be a period, so it suffices to test
    the divisors of the closed form in ascending order over a two-period
    window.
    """
    _require_modulus(d)
    length = closed_form_period(kind, d)
    window = [platonic_value(kind, n) % d for n in range(1, 2 * length + 1)]
    base = window[:length]
    for shift in _divisors(length):
        if window[shift : shift + length] == base:
            return shift
    raise PeriodConsistencyError(
        f"no divisor of {length} is a period of {kind.value} mod {d}; "
        f"the closed-form period claim is violated"
    )


def check_period_claim(kind: PlatonicKind, d: int) -> PeriodReport:
    """Cross-check the closed-form period against the observed minimum."""
    closed = closed_form_period(kind, d)
    observed = empirical_period(kind, d)
    return PeriodReport(
        kind=kind,
        modulus=d,
        closed_form=closed,
        empirical=observed,
        agrees=observed == closed,
    )
