from hypothesis import HealthCheck, given, settings

from ordtopo import spaces as S
from ordtopo.ordinal import parse
from ordtopo.refine import (REFINEMENT_RULES, matched_classes,
                            refine_first_countable, refinement_rules_for)
from ordtopo.spaces import (GoSpace, IsolateWhere, LexProduct, LongSegment,
                            OrdPoint, RealLine, Side)
from strategies import space_descs

p = parse
W = p("W")
L_BASE = LexProduct(RealLine(), LongSegment(W))


def test_rules_do_not_depend_on_input():
    assert refinement_rules_for(S.full(p("w"))) == refinement_rules_for(L_BASE) == REFINEMENT_RULES


def test_omega1_plus_one():
    r = refine_first_countable(S.full(W + 1))
    assert r.first_countable and r.coarseness_witness
    assert S.side_character(r.output, OrdPoint(W), S.LEFT) is Side.NEIGHBOR


def test_already_first_countable_input_is_untouched():
    s = S.full(p("w^2"))
    r = refine_first_countable(s)
    assert all(not keys for keys in matched_classes(s).values())
    assert S.same_spectrum(r.output, s)


def test_l_base():
    r = refine_first_countable(L_BASE)
    assert r.first_countable
    assert matched_classes(L_BASE)[REFINEMENT_RULES[0]] == ["(generic)x(inf)"]
    # the ray only opens the left side; full isolation is strictly finer
    full_iso = GoSpace(L_BASE, [IsolateWhere(S.TOTAL_UNCOUNTABLE)])
    assert S.is_coarser(r.output, full_iso) and not S.is_coarser(full_iso, r.output)
    assert all(Side.UNCOUNTABLE not in e.chars for e in r.spectrum_after)


@settings(max_examples=150, deadline=None, suppress_health_check=list(HealthCheck))
@given(space_descs())
def test_refinement_properties(s):
    r = refine_first_countable(s)
    assert r.first_countable
    assert S.is_coarser(s, r.output)
    again = refine_first_countable(r.output)
    assert again.output == r.output
    assert S.same_spectrum(again.output, r.output)
