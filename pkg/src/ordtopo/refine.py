"""First-countable GO refinement of a GO space.

Points whose left side has uncountable character get the ray ``{z >= y}``
as a new open set; symmetrically on the right.  The base topology is kept,
so the refinement only adds open sets.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .spaces import (LEFT_UNCOUNTABLE, RIGHT_UNCOUNTABLE, GoSpace,
                     LeftRayWhere, RightRayWhere, SpectrumEntry, apply_rules,
                     character_spectrum, first_countable, is_coarser)

REFINEMENT_RULES = (RightRayWhere(LEFT_UNCOUNTABLE), LeftRayWhere(RIGHT_UNCOUNTABLE))


@dataclass(frozen=True)
class RefinementReport:
    input: object
    rules_added: Tuple
    output: GoSpace
    spectrum_before: Tuple[SpectrumEntry, ...]
    spectrum_after: Tuple[SpectrumEntry, ...]
    coarseness_witness: bool

    @property
    def first_countable(self) -> bool:
        return first_countable(self.output)


def refinement_rules_for(y) -> Tuple:
    return REFINEMENT_RULES


def matched_classes(y):
    """Class keys of ``y`` matched by each refinement rule."""
    spec = character_spectrum(y)
    return {rule: [e.key for e in spec if rule.pred.matches(e.key, e.chars)]
            for rule in REFINEMENT_RULES}


def refine_first_countable(y) -> RefinementReport:
    rules = refinement_rules_for(y)
    out = apply_rules(y, rules)
    return RefinementReport(
        input=y,
        rules_added=rules,
        output=out,
        spectrum_before=character_spectrum(y),
        spectrum_after=character_spectrum(out),
        coarseness_witness=is_coarser(y, out),
    )
