import json
from fractions import Fraction

import pytest

from assocord.catalog import S4_M11_GENERATOR, names_for, presentation, standard_group, subgroup
from assocord.classifier import ProfileError
from assocord.group_algebra import AlgebraElement, trace_element
from assocord.lattices import group_ring
from assocord.parsing import (ParseError, load_profiles, parse_element, parse_lattice,
                              parse_presentation, parse_terms, profile_from_dict, profile_to_dict,
                              read_spec, resolve_subgroup)


def test_expression_and_bracket_forms_agree():
    G = standard_group("S4")
    a = parse_lattice("Z[S4] + (1/2)Z[S4]Tr(V2) + (1/4)Z[S4]Tr(C4)")
    b = parse_lattice("<1, 1/2Tr(V2), 1/4Tr(C4)>", G)
    assert a == b == presentation("S4", 2, [(1, "V2"), (2, "C4")]).lattice()


def test_generator_lists_and_plain_group():
    L = parse_lattice("Z[A5]")
    assert L == group_ring(standard_group("A5"))
    G, terms = parse_terms("Z[S4] + 1/3 Z[S4]Tr(sub: (1,2,3))")
    assert terms[1] == (Fraction(1, 3), subgroup("S4", "C3"))


def test_presentation_parsing():
    tp = parse_presentation("Z[S4] + (1/2)Z[S4]Tr(V2) + (1/8)Z[S4]Tr(D8)")
    assert tp.p == 2 and [n for n, _ in tp.levels] == [0, 1, 3]
    assert tp.bracket(names_for("S4")) == "<1, 1/2Tr(V2), 1/8Tr(D8)>"
    with pytest.raises(ParseError):
        parse_presentation("Z[S4] + (3/2)Z[S4]Tr(V2)")
    with pytest.raises(ParseError):
        parse_presentation("Z[S4] + (1/6)Z[S4]Tr(V2)")


@pytest.mark.parametrize("text,pos", [
    ("Z[S4] + (1/2)Z[S4]Tr(V9)", 21),
    ("Z[S4] + (1/2)Q[S4]", 13),
    ("Z[S4] + (1/0)Z[S4]", 9),
    ("Z[S4] + (1/2)Z[A4]Tr(V2)", 15),
    ("Z[S4] (1/2)", 6),
])
def test_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse_lattice(text)
    assert info.value.pos == pos
    assert info.value.pointer().splitlines()[1] == " " * pos + "^"


def test_bracket_needs_group():
    with pytest.raises(ParseError):
        parse_lattice("<1, 1/2Tr(V2)>")


def test_element_round_trip():
    G = standard_group("S4")
    x = parse_element(S4_M11_GENERATOR, G)
    assert x.coefficient(0) == Fraction(-31, 4)
    assert parse_element(str(x), G) == x
    y = parse_element("1 + 1/2*Tr(V4) - 3*(1,2)(3,4)", G)
    expected = AlgebraElement.one(G) + trace_element(subgroup("S4", "V4")) / 2 \
        - 3 * AlgebraElement.basis(G, G.element("(1,2)(3,4)"))
    assert y == expected
    with pytest.raises(ParseError):
        parse_element("1 + (1,5)", G)


def test_read_spec(tmp_path):
    f = tmp_path / "lat.txt"
    f.write_text("Z[S4] + (1/2)Z[S4]Tr(V2)\n")
    assert read_spec(f"@{f}") == "Z[S4] + (1/2)Z[S4]Tr(V2)"
    assert read_spec("Z[S4]") == "Z[S4]"
    with pytest.raises(ParseError):
        read_spec(f"@{tmp_path / 'missing'}")


def test_resolve_subgroup_forms():
    G = standard_group("S4")
    assert resolve_subgroup(G, "G") == G.whole
    assert resolve_subgroup(G, "1") == G.trivial
    assert resolve_subgroup(G, "(1,2,3,4)") == subgroup("S4", "C4")


def test_profiles_round_trip():
    obj = {"group": "S4", "p": 2, "decomposition": "D8", "filtration": ["D8", "D8", "C4", "C4", "V2"]}
    pr = profile_from_dict(obj)
    assert pr.jumps() == [1, 3, 4]
    again = profile_from_dict(json.loads(json.dumps(profile_to_dict(pr))))
    assert again.filtration == pr.filtration and again.decomposition == pr.decomposition
    steps = profile_from_dict({"group": "S4", "p": 2, "decomposition": "D8",
                               "steps": [{"group": "D8", "until": 1}, {"group": "C4", "until": 3},
                                         {"group": "V2", "until": 4}]})
    assert steps.filtration == pr.filtration


def test_load_profiles():
    text = json.dumps({"group": "A5", "profiles": [
        {"p": 2, "decomposition": "C3", "filtration": ["C3"]},
        {"p": 3, "decomposition": "D6", "filtration": ["D6", "C3"]},
        {"p": 5, "decomposition": "C2", "filtration": ["C2"]},
    ]})
    label, profiles = load_profiles(text)
    assert label == "A5" and sorted(profiles) == [2, 3, 5]
    with pytest.raises(ParseError):
        load_profiles("{not json")
    with pytest.raises(ParseError):
        load_profiles(json.dumps({"group": "S4"}))
    with pytest.raises(ProfileError):
        load_profiles(json.dumps({"group": "S4", "p": 2, "decomposition": "D8", "filtration": ["W2", "W2"]}))
