"""Characteristic classes of free Lie algebra bundles and degeneracy loci."""

import json

from ._core import (
    Error,
    Series,
    admissible_templates,
    bounding_templates,
    check,
    cli,
    count_max_depth,
    cumulative_dim,
    hall_words,
    invert,
    lie_class,
    locus,
    oracle_admissible,
    oracle_bounding,
    saturation_length,
    witt_dim,
)

__all__ = [
    "Error",
    "Series",
    "admissible_templates",
    "bounding_templates",
    "check",
    "cli",
    "count_max_depth",
    "cumulative_dim",
    "hall_words",
    "invert",
    "lie_class",
    "locus",
    "oracle_admissible",
    "oracle_bounding",
    "saturation_length",
    "series_dict",
    "witt_dim",
]


def series_dict(series):
    """The JSON form of a Series as a Python dict."""
    return json.loads(series.json())
