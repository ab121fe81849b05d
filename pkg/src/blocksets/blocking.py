"""Verifiers for t-fold blocking, minimality, and two-valued spectra.

All functions are pure and work from exact per-line intersection counts
computed by mask intersection, so results are independent of evaluation
order.
"""

from __future__ import annotations

import json
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .families import PointSet
    from .plane import IncidencePlane

Spectrum = dict[int, int]


def spectrum(plane: "IncidencePlane", point_set: "PointSet") -> Spectrum:
    """Map each intersection size to the number of lines attaining it."""
    if point_set.plane is not plane and point_set.plane != plane:
        raise ValueError("point set belongs to a different plane")
    counts: dict[int, int] = {}
    mask = point_set.mask
    for lm in plane.line_masks:
        size = (mask & lm).bit_count()
        counts[size] = counts.get(size, 0) + 1
    return {k: counts[k] for k in sorted(counts)}


def spectrum_to_json(spec: Spectrum) -> str:
    """Serialize a spectrum as a JSON object with numerically sorted keys."""
    return json.dumps({str(k): spec[k] for k in sorted(spec)})


def is_t_fold_blocking(plane: "IncidencePlane", point_set: "PointSet", t: int) -> bool:
    """True iff every line meets the set in >= t points and some line in exactly t."""
    if not 1 <= t <= plane.order + 1:
        raise ValueError(f"t must be in 1..{plane.order + 1}")
    spec = spectrum(plane, point_set)
    return min(spec) >= t and t in spec


def is_minimal(plane: "IncidencePlane", point_set: "PointSet", t: int) -> bool:
    """True iff every point of the set lies on a line met in exactly t points.

    Requires the set to be a t-fold blocking set; minimality is undefined
    otherwise and a ValueError is raised rather than conflating "not
    blocking" with "not minimal".
    """
    if not is_t_fold_blocking(plane, point_set, t):
        raise ValueError(f"point set is not a {t}-fold blocking set")
    mask = point_set.mask
    cover = 0
    for lm in plane.line_masks:
        if (mask & lm).bit_count() == t:
            cover |= lm
    return mask & cover == mask


def is_two_valued(spec: Spectrum, t: int, b: int) -> bool:
    """True iff the spectrum support is exactly {t, b+1} (both attained)."""
    return set(spec) == {t, b + 1}
