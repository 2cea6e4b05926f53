import pytest

from partgen.core import (Composition, Order, TerminalClass, classify,
                          lexmin_asc, lexsucc_asc, lexsucc_desc, validate)
from partgen.errors import (DomainError, EmptyInput, NoSuccessor,
                            OrderViolation)

from oracles import asc_compositions, brute_terminal, desc_compositions


def test_validate_accepts_both_orders():
    c = validate((1, 2, 2, 3), Order.ASCENDING)
    assert c.n == 8 and c.k == 4
    d = validate((3, 2, 2, 1), Order.DESCENDING)
    assert d.n == 8 and d.parts == (3, 2, 2, 1)


def test_validate_rejects_bad_input():
    with pytest.raises(EmptyInput):
        validate((), Order.ASCENDING)
    with pytest.raises(OrderViolation):
        validate((0, 1), Order.ASCENDING)
    with pytest.raises(OrderViolation):
        validate((2, 1), Order.ASCENDING)
    with pytest.raises(OrderViolation):
        validate((1, 2), Order.DESCENDING)


def test_composition_helpers():
    c = validate((1, 1, 3), Order.ASCENDING)
    assert str(c) == "1+1+3"
    r = c.reversed()
    assert r.parts == (3, 1, 1) and r.order is Order.DESCENDING
    assert r.reversed() == c


@pytest.mark.parametrize("n", range(1, 15))
def test_lexmin_matches_brute_force(n):
    for m in range(1, n + 1):
        assert lexmin_asc(n, m).parts == asc_compositions(n, m)[0]


def test_lexmin_domain():
    with pytest.raises(DomainError):
        lexmin_asc(5, 0)
    with pytest.raises(DomainError):
        lexmin_asc(5, 6)


@pytest.mark.parametrize("n", range(1, 14))
def test_lexsucc_asc_walks_whole_set(n):
    for m in (1, 2):
        if m > n:
            continue
        expected = asc_compositions(n, m)
        c = lexmin_asc(n, m)
        walked = [c.parts]
        while c.k > 1:
            c = lexsucc_asc(c)
            walked.append(c.parts)
        assert tuple(walked) == expected
        with pytest.raises(NoSuccessor):
            lexsucc_asc(c)


@pytest.mark.parametrize("n", range(1, 14))
def test_lexsucc_desc_walks_whole_set(n):
    expected = tuple(reversed(desc_compositions(n)))
    c = validate((n,), Order.DESCENDING)
    walked = [c.parts]
    while c.parts[0] != 1:
        c = lexsucc_desc(c)
        walked.append(c.parts)
    assert tuple(walked) == expected
    with pytest.raises(NoSuccessor):
        lexsucc_desc(c)


def test_desc_succession_redistributes_tail():
    c = validate((3, 3, 2, 1, 1, 1, 1), Order.DESCENDING)
    assert lexsucc_desc(c).parts == (3, 3, 1, 1, 1, 1, 1, 1)


def test_succession_rules_reject_wrong_order():
    with pytest.raises(DomainError):
        lexsucc_asc(validate((2, 1), Order.DESCENDING))
    with pytest.raises(DomainError):
        lexsucc_desc(validate((1, 2), Order.ASCENDING))
    with pytest.raises(DomainError):
        classify(validate((2, 1), Order.DESCENDING))


@pytest.mark.parametrize("n", range(1, 16))
def test_classify_matches_brute_force(n):
    for parts in asc_compositions(n):
        want = TerminalClass.TERMINAL if brute_terminal(parts) else TerminalClass.NONTERMINAL
        assert classify(validate(parts, Order.ASCENDING)) is want


def test_nonterminal_successors_keep_their_prefix():
    # Every nonterminal successor is a rewrite of the last two parts
    # only: the prefix up to position k-2 survives unchanged.
    for n in range(2, 14):
        for parts in asc_compositions(n):
            c = validate(parts, Order.ASCENDING)
            if c.k == 1 or classify(c) is TerminalClass.TERMINAL:
                continue
            succ = lexsucc_asc(c)
            assert succ.parts[:c.k - 2] == c.parts[:c.k - 2]
