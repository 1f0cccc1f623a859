from fractions import Fraction

import pytest

from mpgsolver import (Arena, ArenaFormatError, MaskError, SubgameMask,
                       apply_mask, parse_arena, reweight, serialize_arena,
                       to_dot)
from mpgsolver.oracle import gen_random_arena


def test_parse_gamma_ex(gamma_ex):
    assert gamma_ex.n == 7
    assert gamma_ex.arc_count() == 10
    assert gamma_ex.W == 5
    assert gamma_ex.names == ("A", "B", "C", "D", "E", "F", "G")
    assert gamma_ex.owner == (1, 0, 1, 0, 0, 1, 0)


def test_parse_single_self_loop():
    a = parse_arena("v x 0\ne x x 0\n")
    assert a.n == 1
    assert a.W == 0
    assert a.out[0] == ((0, 0),)


def test_parse_dead_end_rejected():
    text = "v a 0\nv b 1\ne a b 1\n"
    with pytest.raises(ArenaFormatError) as err:
        parse_arena(text)
    assert "b" in str(err.value)
    assert err.value.line == 2


@pytest.mark.parametrize("text,fragment", [
    ("v a 0\ne a a 1\ne a a 2\n", "duplicate arc"),
    ("v a 0\ne a zz 1\n", "unknown vertex"),
    ("v a 2\ne a a 1\n", "owner"),
    ("v a 0\ne a a x\n", "integer"),
    ("v a-b 0\n", "invalid id"),
    ("w a 0\n", "unknown statement"),
    ("v a 0\nv a 0\ne a a 1\n", "declared twice"),
    ("# only a comment\n", "no vertices"),
])
def test_parse_errors(text, fragment):
    with pytest.raises(ArenaFormatError) as err:
        parse_arena(text)
    assert fragment in str(err.value)


def test_parse_error_reports_position():
    with pytest.raises(ArenaFormatError) as err:
        parse_arena("v a 0\ne a a oops\n")
    assert err.value.line == 2
    assert err.value.column == 7


def test_parse_accepts_bytes_and_comments(gamma_ex):
    text = "# heading\n\n" + serialize_arena(gamma_ex)
    assert parse_arena(text.encode("utf-8")) == gamma_ex


def test_reweight_gamma_ex_matches_displayed_weights(gamma_ex):
    scaled = reweight(gamma_ex, Fraction(-1))
    by_pair = {(scaled.names[u], scaled.names[v]): w
               for u, v, w in scaled.arcs()}
    assert by_pair[("A", "B")] == 4
    assert by_pair[("B", "C")] == 4
    assert by_pair[("C", "D")] == -4
    assert by_pair[("D", "A")] == -4
    assert by_pair[("F", "G")] == -4
    assert by_pair[("G", "F")] == 4
    assert all(by_pair[("E", x)] == 1 for x in "ACFG")
    assert scaled.scale == 1


def test_reweight_zero_is_identity(gamma_ex):
    assert reweight(gamma_ex, Fraction(0)) == gamma_ex


def test_reweight_scales_by_denominator():
    a = Arena(["x"], [0], [(0, 0, 3)])
    scaled = reweight(a, Fraction(1, 2))
    assert scaled.out[0] == ((0, 5),)
    assert scaled.scale == 2


def test_reweight_composes_scales():
    a = Arena(["x"], [0], [(0, 0, 3)])
    twice = reweight(reweight(a, Fraction(1, 2)), Fraction(1, 3))
    assert twice.scale == 6


def test_apply_mask_gamma_d_drops_one_arc(gamma_d):
    t = gamma_d.index["t"]
    v4 = gamma_d.index["v4"]
    u4 = gamma_d.index["u4"]
    mask = SubgameMask.full(gamma_d).with_restriction(t, [u4])
    sub = gamma_d  # noqa: F841  (readability)
    restricted = apply_mask(gamma_d, mask)
    assert restricted.arc_count() == 13
    assert not restricted.has_arc(t, v4)
    assert restricted.has_arc(t, u4)
    assert restricted.names == gamma_d.names


def test_apply_full_mask_is_identity(gamma_d):
    assert apply_mask(gamma_d, SubgameMask.full(gamma_d)) == gamma_d


def test_apply_mask_rejects_emptied_vertex(gamma_d):
    t = gamma_d.index["t"]
    mask = SubgameMask.full(gamma_d).with_restriction(t, [])
    with pytest.raises(MaskError):
        apply_mask(gamma_d, mask)


def test_apply_mask_rejects_foreign_arc(gamma_d):
    t = gamma_d.index["t"]
    mask = SubgameMask.full(gamma_d).with_restriction(t, [gamma_d.index["u1"]])
    with pytest.raises(MaskError):
        apply_mask(gamma_d, mask)


def test_mask_monotone_means_arc_subset(gamma_d):
    t = gamma_d.index["t"]
    smaller = SubgameMask.full(gamma_d).with_restriction(
        t, [gamma_d.index["u4"]])
    sub = apply_mask(gamma_d, smaller)
    parent_arcs = set(gamma_d.arcs())
    assert set(sub.arcs()) < parent_arcs


def test_serialize_round_trip_gamma_ex(gamma_ex, data_dir):
    source = (data_dir / "gamma_ex.mpg").read_text()
    once = parse_arena(source)
    again = parse_arena(serialize_arena(once))
    assert once == again
    # canonical text is a fixpoint of serialize(parse(.))
    assert serialize_arena(again) == serialize_arena(once)


def test_serialize_single_loop_shape():
    text = serialize_arena(Arena(["x"], [0], [(0, 0, 0)]))
    lines = text.strip().splitlines()
    assert lines[0].startswith("#")
    assert lines[1] == "v x 0"
    assert lines[2] == "e x x 0"
    assert len(lines) == 3


def test_serialize_gamma_d_counts(gamma_d):
    again = parse_arena(serialize_arena(gamma_d))
    assert again.n == 11
    assert again.arc_count() == 14


@pytest.mark.parametrize("seed", range(40))
def test_round_trip_random_arenas(seed):
    a = gen_random_arena(6, 3, 6, seed)
    assert parse_arena(serialize_arena(a)) == a


def test_to_dot_mentions_every_arc(gamma_ex):
    dot = to_dot(gamma_ex)
    assert dot.count("->") == gamma_ex.arc_count()


def test_weight_lookup(gamma_ex):
    assert gamma_ex.weight(gamma_ex.index["C"], gamma_ex.index["D"]) == -5
    with pytest.raises(KeyError):
        gamma_ex.weight(gamma_ex.index["A"], gamma_ex.index["C"])
