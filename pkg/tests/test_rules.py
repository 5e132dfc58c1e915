import random

from leveler.braid_core import RELATORS, check_catalog, parity, rule_catalog, splice
from leveler.braid_core.rules import pattern_of, relator_rotations
from leveler.braid_core.words import inverse_letters, reduce_letters


def _oracle_pairs():
    """Every split of every rotation, unoriented, found by brute force."""
    words = []
    for r in RELATORS.values():
        inv = "".join(c.swapcase() for c in reversed(r))
        for x in (r, inv):
            words += [x[i:] + x[:i] for i in range(len(x))]
    pairs = set()
    for rot in words:
        for t in range(len(rot) + 1):
            lhs = rot[:t]
            rhs = "".join(c.swapcase() for c in reversed(rot[t:]))
            pairs.add(frozenset([(lhs, rhs), (rhs, lhs)]))
    return pairs


def test_catalog_matches_brute_force():
    got = {frozenset([(r.lhs, r.rhs), (r.rhs, r.lhs)]) for r in rule_catalog()}
    assert got == _oracle_pairs()
    assert len(rule_catalog()) == 62


def test_catalog_is_sound():
    check_catalog()
    ids = [r.rule_id for r in rule_catalog()]
    assert ids == sorted(ids) and len(set(ids)) == len(ids)


def test_catalog_examples():
    pairs = {(r.lhs, r.rhs) for r in rule_catalog()}
    assert ("M", "sms") in pairs  # sms -> m^-1
    assert ("", "msms") in pairs  # pure insertion
    assert ("s", "LSL") in pairs  # l^-1 s^-1 l^-1 -> s
    assert ("ls", "SL") in pairs  # s^-1 l^-1 -> l s
    assert ("", "LSSL") not in pairs and ("sllS", "") not in pairs


def test_relator_rotations_have_trivial_parity():
    for rot in relator_rotations():
        assert tuple(parity(rot)) == (0, 0, 0)


def test_rules_preserve_parity_everywhere():
    rng = random.Random(7)
    for _ in range(300):
        word = reduce_letters("".join(rng.choice("mlsMLS") for _ in range(rng.randint(0, 10))))
        for r in rule_catalog():
            for sign in (1, -1):
                pat, rep = pattern_of(r, sign)
                pos = word.find(pat) if pat else rng.randint(0, len(word))
                if pos < 0:
                    continue
                new, _ = splice(word, pos, len(pat), rep)
                assert parity(new) == parity(word)


def test_splice_inverse_restores():
    rng = random.Random(3)
    for _ in range(500):
        word = reduce_letters("".join(rng.choice("mlsMLS") for _ in range(rng.randint(0, 8))))
        r = rng.choice(rule_catalog())
        pat, rep = pattern_of(r, rng.choice((1, -1)))
        pos = word.find(pat) if pat else rng.randint(0, len(word))
        if pos < 0:
            continue
        new, inv = splice(word, pos, len(pat), rep)
        assert new == reduce_letters(word[:pos] + rep + word[pos + len(pat):])
        if inv is not None:
            start, p2, r2 = inv
            assert new.startswith(p2, start)
            assert splice(new, start, len(p2), r2)[0] == word
            assert reduce_letters(p2 + inverse_letters(r2)) in relator_rotations() | {""}
