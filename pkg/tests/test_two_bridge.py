from fractions import Fraction as F
from math import gcd

import pytest

from leveler.braid_core import parse_word
from leveler.two_bridge import (CFExpansion, ExpansionError, Form, cf_value, conway_params,
                                flip_params, level_bound_rho1, level_bound_rho2,
                                optimize_expansion, parse_entries, rho1_word, rho2_word,
                                validate_expansion)

from oracles import even_expansions

BIG = (6, 2, 2, -2, 2, -2, 2, -2, 2, -2, 2, 2, 6, 4)


def _valid(max_p):
    for p in range(-max_p, max_p + 1):
        for q in range(-max_p, max_p + 1):
            if p % 2 and q and q % 2 == 0 and abs(q) < abs(p) and gcd(p, q) == 1:
                yield F(p, q)


def test_cf_value_examples():
    assert cf_value([4, -2, 2, -2]) == F(13, 4)
    assert cf_value([2, -2]) == F(3, 2)
    assert cf_value([6, 3, -10, 3, 6, 4]) == cf_value(BIG)
    with pytest.raises(ExpansionError):
        cf_value([2, 0])


def test_conway_examples():
    assert conway_params(F(13, 4)).entries == (4, -2, 2, -2)
    assert conway_params(F(-3, 2)).entries == (-2, 2)
    for n in (1, 2, 3):
        assert conway_params(F(2 * n + 1, 2 * n)).entries == (2, -2) * n
    assert conway_params(cf_value(BIG)).entries == BIG


@pytest.mark.parametrize("bad", [F(4, 3), F(3, 5), F(3, 4), F(1, 2)])
def test_conway_rejects(bad):
    with pytest.raises(ExpansionError):
        conway_params(bad)


def test_conway_round_trip_and_shape():
    for r in _valid(99):
        e = conway_params(r)
        assert cf_value(e) == r
        assert len(e) % 2 == 0 and all(x and x % 2 == 0 for x in e.entries)


def test_conway_matches_brute_force():
    table = even_expansions(30)
    for r in _valid(30):
        assert table.get(r) == [list(conway_params(r).entries)]


def test_validate():
    assert validate_expansion(F(13, 4), CFExpansion((4, -2, 2, -2), Form.ALL_EVEN))
    assert not validate_expansion(F(13, 4), (4, -2, 2, 2))
    assert validate_expansion(cf_value(BIG), (6, 3, -10, 3, 6, 4), Form.EVEN_ODD)
    assert not validate_expansion(cf_value(BIG), (6, 3, -10, 3, 6, 4), Form.ALL_EVEN)
    assert not validate_expansion(F(3, 2), (2, 0, 2, -2))


def test_braid_descriptions():
    allev = lambda xs: CFExpansion(xs, Form.ALL_EVEN)
    assert rho1_word(allev((-2, 2))) == parse_word("m s^2 l")
    assert rho1_word(allev((4, -2, 2, -2))) == parse_word("m s^-2 l^-1 s^-2 l^-2")
    assert rho2_word(allev((4, -2, 2, -2))) == parse_word("m s^-4 l^-1 s^-2 l^-1")
    with pytest.raises(ExpansionError):
        rho1_word(CFExpansion((3, 4), Form.ODD_EVEN))


def test_description_structure():
    for r in _valid(41):
        e = conway_params(r)
        for word in (rho1_word(e), rho2_word(e)):
            gens = [g for g, _ in word.syllables]
            assert gens[0] == "m"
            assert all(g in "sl" for g in gens[1:])
            assert all(a != b for a, b in zip(gens[1:], gens[2:]))


def test_level_bounds():
    assert level_bound_rho1(CFExpansion(BIG, Form.EVEN_ODD)) == 9
    assert level_bound_rho1(CFExpansion((6, 3, -10, 3, 6, 4), Form.EVEN_ODD)) == 6
    assert level_bound_rho1(CFExpansion((4, -2, 2, -2), Form.EVEN_ODD)) == 3
    assert level_bound_rho2(CFExpansion((4, -2, 2, -2), Form.ODD_EVEN)) == 3
    assert level_bound_rho1(CFExpansion((2, -2), Form.EVEN_ODD)) == 2


def test_flip():
    e = CFExpansion((4, -2, 2, -2), Form.ALL_EVEN)
    f = flip_params(e)
    assert f.entries == (2, -2, 2, -4)
    assert cf_value(f) == F(13, 10) and (4 * 10) % 13 in (1, 12)
    assert flip_params(CFExpansion((-2, 2), Form.ALL_EVEN)).entries == (-2, 2)
    assert flip_params(CFExpansion((6, -4), Form.ALL_EVEN)).entries == (4, -6)


def test_flip_involution_and_modular_identity():
    for r in _valid(45):
        e = conway_params(r)
        f = flip_params(e)
        assert flip_params(f) == e
        v = cf_value(f)
        assert abs(v.numerator) == abs(r.numerator)
        p = abs(r.numerator)
        assert (r.denominator * v.denominator) % p in (1, p - 1)


def test_optimize():
    e, bound = optimize_expansion(cf_value(BIG), "rho1")
    assert bound == 6 and e.entries == (6, 3, -10, 3, 6, 4)
    assert optimize_expansion(F(3, 2), "rho1")[1] == 2
    e, bound = optimize_expansion(F(13, 4), "rho2")
    assert bound == 2 and cf_value(e) == F(13, 4)


def test_optimize_never_worse():
    for r in _valid(25):
        base = conway_params(r)
        assert optimize_expansion(r, "rho1")[1] <= level_bound_rho1(base.as_form(Form.EVEN_ODD))
        assert optimize_expansion(r, "rho2")[1] <= level_bound_rho2(base.as_form(Form.ODD_EVEN))


def test_parse_entries():
    assert parse_entries("[4,-2, 2,-2]") == (4, -2, 2, -2)
    with pytest.raises(ExpansionError):
        parse_entries("4,x")
