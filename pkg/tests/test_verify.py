import itertools

from partgen.generators import Algorithm, iter_rule_asc
from partgen.verify import default_iterators, run_suite


def results_by_name(results):
    return {name: (ok, detail) for name, ok, detail in results}


def test_suite_passes_on_the_real_generators():
    for name, ok, detail in run_suite(16):
        assert ok, f"{name}: {detail}"


def broken_drops_last_visit(n, hooks=None, include_init=False):
    steps = list(iter_rule_asc(n, hooks, include_init))
    yield from steps[:-1]


def broken_duplicates_a_visit(n, hooks=None, include_init=False):
    first = True
    for step in iter_rule_asc(n, hooks, include_init):
        yield step
        if first:
            first = False
            yield step


def broken_wrong_composition(n, hooks=None, include_init=False):
    for buf, lo, hi in iter_rule_asc(n, hooks, include_init):
        fake = list(buf)
        if hi - lo >= 2:
            fake[lo], fake[lo + 1] = fake[lo + 1], fake[lo]
        yield fake, lo, hi


def broken_extra_reads(n, hooks=None, include_init=False):
    for step in iter_rule_asc(n, hooks, include_init):
        if hooks is not None:
            hooks.on_read(1)
        yield step


def test_suite_catches_a_missing_partition():
    iterators = default_iterators()
    iterators[Algorithm.RULE_ASC] = broken_drops_last_visit
    names = results_by_name(run_suite(10, iterators))
    assert not names["differential-equivalence"][0]
    assert "rule-asc" in names["differential-equivalence"][1]


def test_suite_catches_a_duplicate_partition():
    iterators = default_iterators()
    iterators[Algorithm.RULE_ASC] = broken_duplicates_a_visit
    names = results_by_name(run_suite(10, iterators))
    assert not names["differential-equivalence"][0]
    assert not names["order-contracts"][0]


def test_suite_catches_order_violations():
    iterators = default_iterators()
    iterators[Algorithm.RULE_ASC] = broken_wrong_composition
    names = results_by_name(run_suite(10, iterators))
    assert not names["order-contracts"][0]
    assert not names["succession-conformance"][0]


def test_suite_catches_wrong_operation_counts():
    iterators = default_iterators()
    iterators[Algorithm.RULE_ASC] = broken_extra_reads
    names = results_by_name(run_suite(10, iterators))
    assert not names["counter-closed-forms"][0]
    assert "reads" in names["counter-closed-forms"][1]
    # the untouched layers still pass
    assert names["partition-counts"][0]
    assert names["identities"][0]
