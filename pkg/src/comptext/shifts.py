"""Word shift measures comparing a reference and a comparison distribution.

Three measures, all in log base 2:

* proportion: per word, the difference in relative frequency,
  ``p_comp - p_ref``. Positive means the word is relatively more common in
  the comparison text.
* entropy: Shannon entropy ``H(P) = sum p * log2(1/p)`` over each full
  distribution; per word, the difference of surprisal terms
  ``p_comp * log2(1/p_comp) - p_ref * log2(1/p_ref)``, which is the unique
  per-word decomposition of ``H(comp) - H(ref)``.
* divergence: Kullback-Leibler divergence of the comparison with respect to
  the reference, restricted to the common vocabulary; per word,
  ``p_comp * log2(p_comp / p_ref)``. Frequencies always come from the full
  distributions; the common-word restriction only limits which terms are
  summed, so the restricted sum can be negative when supports differ.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import EmptyDistributionError, NoCommonSupportError
from .ingest import TokenDistribution

DEFAULT_TOP_K = 30


class Measure(str, Enum):
    PROPORTION = "proportion"
    ENTROPY = "entropy"
    DIVERGENCE = "divergence"


class Direction(str, Enum):
    TOWARD_COMPARISON = "toward_comparison"
    TOWARD_REFERENCE = "toward_reference"


@dataclass(frozen=True)
class ShiftItem:
    """One word's signed contribution to a measure."""

    term: str
    contribution: float
    p_ref: float
    p_comp: float

    @property
    def direction(self) -> Direction:
        return (
            Direction.TOWARD_COMPARISON
            if self.contribution > 0
            else Direction.TOWARD_REFERENCE
        )


@dataclass(frozen=True)
class ShiftReport:
    """Ranked shift items plus the cumulative-contribution curve.

    ``items`` holds the top ``k`` words by absolute contribution;
    ``cumulative`` covers every ranked word, as (rank, running sum of
    absolute contributions) pairs.
    """

    measure: Measure
    ref_id: str
    comp_id: str
    k: int
    items: tuple[ShiftItem, ...]
    cumulative: tuple[tuple[int, float], ...]
    total_shift: float
    ref_size: int
    comp_size: int


def _surprisal_term(p: float) -> float:
    """p * log2(1/p), with the p = 0 limit taken as 0."""
    if p <= 0.0:
        return 0.0
    return p * -math.log2(p)


def _require_nonempty(*dists: TokenDistribution) -> None:
    for dist in dists:
        if dist.total == 0:
            raise EmptyDistributionError(
                "distribution is empty; entropy and shifts are undefined"
            )


def shannon_entropy(dist: TokenDistribution) -> float:
    """Average surprisal of the distribution, in bits."""
    _require_nonempty(dist)
    return math.fsum(_surprisal_term(dist.frequency(t)) for t in dist.counts)


def entropy_difference(ref: TokenDistribution, comp: TokenDistribution) -> float:
    """H(comp) - H(ref); positive means the comparison text is more
    unpredictable."""
    return shannon_entropy(comp) - shannon_entropy(ref)


def kl_divergence_common(ref: TokenDistribution, comp: TokenDistribution) -> float:
    """KL divergence of comp from ref, summed over the common vocabulary."""
    _require_nonempty(ref, comp)
    common = ref.vocabulary & comp.vocabulary
    if not common:
        raise NoCommonSupportError()
    return math.fsum(
        comp.frequency(t) * math.log2(comp.frequency(t) / ref.frequency(t))
        for t in common
    )


def _union_items(ref, comp, contribution) -> list[ShiftItem]:
    _require_nonempty(ref, comp)
    items = []
    for term in sorted(ref.vocabulary | comp.vocabulary):
        p_ref = ref.frequency(term)
        p_comp = comp.frequency(term)
        items.append(
            ShiftItem(
                term=term,
                contribution=contribution(p_ref, p_comp),
                p_ref=p_ref,
                p_comp=p_comp,
            )
        )
    return items


def proportion_shift_items(
    ref: TokenDistribution, comp: TokenDistribution
) -> list[ShiftItem]:
    """One item per word in the union of supports, contribution
    ``p_comp - p_ref``. Contributions over the union always sum to zero."""
    return _union_items(ref, comp, lambda p1, p2: p2 - p1)


def entropy_shift_items(
    ref: TokenDistribution, comp: TokenDistribution
) -> list[ShiftItem]:
    """Surprisal-term differences; they sum to the entropy difference."""
    return _union_items(
        ref, comp, lambda p1, p2: _surprisal_term(p2) - _surprisal_term(p1)
    )


def divergence_shift_items(
    ref: TokenDistribution, comp: TokenDistribution
) -> list[ShiftItem]:
    """Per-word divergence over common words; sums to
    :func:`kl_divergence_common`."""
    _require_nonempty(ref, comp)
    common = ref.vocabulary & comp.vocabulary
    if not common:
        raise NoCommonSupportError()
    items = []
    for term in sorted(common):
        p_ref = ref.frequency(term)
        p_comp = comp.frequency(term)
        items.append(
            ShiftItem(
                term=term,
                contribution=p_comp * math.log2(p_comp / p_ref),
                p_ref=p_ref,
                p_comp=p_comp,
            )
        )
    return items


_ITEM_BUILDERS = {
    Measure.PROPORTION: proportion_shift_items,
    Measure.ENTROPY: entropy_shift_items,
    Measure.DIVERGENCE: divergence_shift_items,
}


def build_report(
    measure: Measure | str,
    ref: TokenDistribution,
    comp: TokenDistribution,
    *,
    k: int = DEFAULT_TOP_K,
    common_only: bool = True,
    ref_id: str = "reference",
    comp_id: str = "comparison",
) -> ShiftReport:
    """Rank shift items and assemble the full report for one measure.

    By default items are restricted to words common to both texts before
    ranking; ``common_only=False`` widens proportion and entropy items to
    the union of supports (divergence always needs common support). Ranking
    is by absolute contribution, descending, ties broken by term. The
    cumulative curve spans every ranked word, not just the top ``k``.
    """
    measure = Measure(measure)
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    try:
        items = _ITEM_BUILDERS[measure](ref, comp)
    except NoCommonSupportError:
        raise NoCommonSupportError(ref_id, comp_id) from None
    if common_only and measure is not Measure.DIVERGENCE:
        common = ref.vocabulary & comp.vocabulary
        items = [item for item in items if item.term in common]

    items.sort(key=lambda item: (-abs(item.contribution), item.term))

    cumulative = []
    running = 0.0
    for rank, item in enumerate(items, 1):
        running += abs(item.contribution)
        cumulative.append((rank, running))

    if measure is Measure.PROPORTION:
        total_shift = math.fsum(abs(item.contribution) for item in items)
    elif measure is Measure.ENTROPY:
        total_shift = entropy_difference(ref, comp)
    else:
        total_shift = kl_divergence_common(ref, comp)

    return ShiftReport(
        measure=measure,
        ref_id=ref_id,
        comp_id=comp_id,
        k=k,
        items=tuple(items[:k]),
        cumulative=tuple(cumulative),
        total_shift=total_shift,
        ref_size=ref.total,
        comp_size=comp.total,
    )
