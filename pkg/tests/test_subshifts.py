import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import glimca

from .util import *

GOLDEN      = glimca.Sft.from_forbidden(BINARY, ["11"])
PERIOD_TWO  = glimca.Sft.from_forbidden(BINARY, ["00", "11"])
FIXED       = glimca.Sft.from_forbidden(BINARY, ["01", "10"])
INCREASING  = glimca.Sft.from_forbidden(BINARY, ["10"])
FULL        = glimca.Sft.full_shift(BINARY)

forbidden_words = st.lists(
    st.lists(st.sampled_from("01"), min_size=1, max_size=3).map(tuple),

    max_size = 4,
)

allowed_pairs = st.sets(
    st.tuples(st.sampled_from("012"), st.sampled_from("012")),

    min_size = 1,
)

def _avoids(word, forbidden):
    return not any(f in glimca.util.factors(word, len(f)) for f in forbidden)

def test_sft_construction():
    assert GOLDEN.window == 2
    assert len(GOLDEN.allowed) == 3
    assert len(FULL.language(3)) == 8

    with pytest.raises(ValueError):
        glimca.Sft(BINARY, 0, [])

    with pytest.raises(ValueError):
        glimca.Sft(BINARY, 2, [("0",)])

    with pytest.raises(glimca.AlphabetError):
        glimca.Sft(BINARY, 1, [("2",)])

def test_pruning():
    # "1" can be entered but never left
    sft = glimca.Sft(BINARY, 2, [("0", "0"), ("0", "1")])

    assert sft.essential == {("0", "0")}
    assert sft.language(3) == {("0", "0", "0")}
    assert sft == glimca.Sft(BINARY, 2, [("0", "0")])

def test_empty_sft():
    empty = glimca.Sft.from_forbidden(BINARY, ["0", "1"])

    assert empty.is_empty()
    assert empty.language(4) == frozenset()

    with pytest.raises(glimca.EmptySubshiftError):
        glimca.is_transitive(empty)

    with pytest.raises(glimca.EmptySubshiftError):
        glimca.periodic_factor_obstruction(empty)

    with pytest.raises(glimca.EmptySubshiftError):
        glimca.chain_components(empty, 1)

@settings(max_examples=40, deadline=None)
@given(forbidden_words)
def test_language_matches_brute_force(forbidden):
    sft = glimca.Sft.from_forbidden(BINARY, forbidden)

    # Words extendable this far on both sides are extendable forever
    reach = 4
    for k in range(6):
        extended = (w for w in itertools.product("01", repeat=k + 2 * reach) if _avoids(w, forbidden))

        assert sft.language(k) == {w[reach:reach + k] for w in extended}

def test_language_budget():
    with pytest.raises(glimca.BudgetExceeded):
        FULL.language(6, cap=10)

    with pytest.raises(glimca.HorizonError):
        FULL.language(-1)

def test_higher_block():
    graph = GOLDEN.higher_block(2)

    assert graph.number_of_nodes() == 3
    assert graph.number_of_edges() == 5

    with pytest.raises(glimca.HorizonError):
        GOLDEN.higher_block(1)

def test_transitivity_and_mixing():
    assert glimca.is_transitive(GOLDEN)
    assert glimca.is_mixing(GOLDEN)

    assert glimca.is_transitive(PERIOD_TWO)
    assert not glimca.is_mixing(PERIOD_TWO)

    assert not glimca.is_transitive(INCREASING)
    assert not glimca.is_mixing(INCREASING)

    assert not glimca.is_transitive(FIXED)

    assert glimca.is_mixing(FULL)

def test_sigma_period():
    assert glimca.sigma_period(PERIOD_TWO) == [2]
    assert glimca.sigma_period(GOLDEN) == [1]
    assert glimca.sigma_period(FIXED) == [1, 1]

@given(allowed_pairs)
def test_mixing_implies_transitive(allowed):
    sft = glimca.Sft(glimca.Alphabet("012"), 2, allowed)

    if sft.is_empty():
        return

    if glimca.is_mixing(sft):
        assert glimca.is_transitive(sft)

    if glimca.is_transitive(sft):
        assert glimca.is_mixing(sft) == (glimca.sigma_period(sft) == [1])

def test_language_sample():
    sample = glimca.LanguageSample.from_words(BINARY, [tuple("0011")])

    assert sample.max_length == 4
    assert sample.words(2) == {("0", "0"), ("0", "1"), ("1", "1")}
    assert ("1", "0") not in sample
    assert ("0", "1", "1") in sample
    assert sample.provenance.is_exact

    with pytest.raises(glimca.HorizonError):
        sample.words(5)

    with pytest.raises(ValueError):
        glimca.LanguageSample(BINARY, {0: [()], 1: [("0",)], 2: [("0", "1")]}, 2)

    with pytest.raises(ValueError):
        glimca.Provenance.sampled(None)

def test_language_sample_from_sft():
    sample = glimca.LanguageSample.from_sft(GOLDEN, 3)

    assert sample.words(3) == GOLDEN.language(3)
    assert sample == glimca.LanguageSample.from_words(BINARY, GOLDEN.language(3))

def test_orbit_closure_sample():
    cyclic = glimca.orbit_closure_sample(BINARY, glimca.Configuration.cyclic("01"), 3)
    assert cyclic.words(2) == {("0", "1"), ("1", "0")}
    assert cyclic.words(3) == {("0", "1", "0"), ("1", "0", "1")}

    step = glimca.orbit_closure_sample(BINARY, glimca.Configuration.two_sided("0", "", "1"), 3)
    assert step.words(3) == {("0", "0", "0"), ("0", "0", "1"), ("0", "1", "1"), ("1", "1", "1")}

def test_sft_approximation():
    sample = glimca.LanguageSample.from_words(BINARY, [tuple("0011")])

    approximation = glimca.sft_approximation(sample, 2)
    assert approximation.window == 2
    assert approximation.essential == {("0", "0"), ("0", "1"), ("1", "1")}

    with pytest.raises(glimca.HorizonError):
        glimca.sft_approximation(sample, 0)

def test_chain_transitivity():
    step = glimca.orbit_closure_sample(BINARY, glimca.Configuration.two_sided("0", "", "1"), 3)

    verdict = glimca.is_chain_transitive(step, 3)
    assert not verdict
    assert verdict.failing_n == 2

    verdict = glimca.is_chain_transitive(glimca.LanguageSample.from_sft(GOLDEN, 4), 4)
    assert verdict.holds
    assert verdict.failing_n is None

    with pytest.raises(glimca.HorizonError):
        glimca.is_chain_transitive(step, 4)

def _check_partition(sft, partition):
    words = set(sft.language(partition.n))

    assert set().union(*partition.classes) == words
    assert sum(len(c) for c in partition.classes) == len(words)

    # No allowed word meets two classes
    for w in sft.language(max(partition.n, sft.window) + 1):
        indices = {partition.class_of(w[i:i + partition.n]) for i in range(len(w) - partition.n + 1)}
        assert len(indices) == 1

def test_chain_components():
    partition = glimca.chain_components(FIXED, 1)
    assert [sorted(c) for c in partition.classes] == [[("0",)], [("1",)]]
    assert partition.components[0].essential == {("0", "0")}
    assert partition.class_of(("1",)) == 1
    assert partition.class_of(("2",)) is None
    _check_partition(FIXED, partition)

    partition = glimca.chain_components(FULL, 2)
    assert len(partition.classes) == 1
    _check_partition(FULL, partition)

    # 00 and 11 are linked through 01
    partition = glimca.chain_components(INCREASING, 2)
    assert len(partition.classes) == 1
    _check_partition(INCREASING, partition)

    with pytest.raises(glimca.HorizonError):
        glimca.chain_components(FULL, 0)

@given(allowed_pairs, st.integers(1, 3))
def test_chain_components_partition(allowed, n):
    sft = glimca.Sft(glimca.Alphabet("012"), 2, allowed)

    if sft.is_empty():
        return

    partition = glimca.chain_components(sft, n)
    _check_partition(sft, partition)

    for component in partition.components:
        assert not component.is_empty()

def test_block_image():
    identity = glimca.LocalRule.from_builtin("identity")
    shift    = glimca.LocalRule.from_builtin("shift")

    assert glimca.block_image(identity, GOLDEN, 3).allowed == GOLDEN.language(3)
    assert glimca.block_image(shift, GOLDEN, 3).allowed == GOLDEN.language(3)

    # The minimum rule never shows 101
    assert ("1", "0", "1") not in glimca.block_image(glimca.LocalRule.from_builtin("min"), FULL, 3).allowed

    with pytest.raises(glimca.AlphabetError):
        glimca.block_image(identity, glimca.Sft.full_shift(glimca.Alphabet("012")), 2)

    with pytest.raises(glimca.HorizonError):
        glimca.block_image(identity, GOLDEN, 0)

def test_component_permutation():
    swap = glimca.LocalRule.from_builtin("swap")

    permutation = glimca.component_permutation(swap, FIXED, 1)
    assert permutation.mapping == {0: 1, 1: 0}
    assert permutation.is_permutation
    assert permutation.is_cyclic
    assert permutation.cycle_type == (2,)

    permutation = glimca.component_permutation(glimca.LocalRule.from_builtin("identity"), FIXED, 1)
    assert permutation.mapping == {0: 0, 1: 1}
    assert not permutation.is_cyclic
    assert permutation.cycle_type == (1, 1)

    permutation = glimca.component_permutation(glimca.LocalRule.from_builtin("shift"), FULL, 1)
    assert permutation.mapping == {0: 0}
    assert permutation.is_cyclic

    # Everything is sent to 0
    permutation = glimca.component_permutation(glimca.ElementaryRule(0), FIXED, 1)
    assert permutation.mapping == {0: 0, 1: 0}
    assert not permutation.is_permutation
    assert permutation.cycle_type is None

def test_periodic_factor_obstruction():
    verdict = glimca.periodic_factor_obstruction(PERIOD_TWO)
    assert verdict.obstructed
    assert verdict.period == 2
    assert verdict.describe() == "obstructed p=2: cannot be the generic limit set (periodic finite factor)"

    verdict = glimca.periodic_factor_obstruction(FULL)
    assert verdict.kind == glimca.ObstructionKind.Clear
    assert verdict.describe() == "clear: no periodic finite factor"

    assert glimca.periodic_factor_obstruction(FIXED).kind == glimca.ObstructionKind.Clear
    assert glimca.periodic_factor_obstruction(GOLDEN).kind == glimca.ObstructionKind.Clear

def test_periodic_factor_obstruction_inconclusive():
    a   = glimca.Alphabet("abcde")
    sft = glimca.Sft(a, 2, [tuple(w) for w in ("ab", "ba", "cd", "de", "ec")])

    verdict = glimca.periodic_factor_obstruction(sft)
    assert verdict.kind == glimca.ObstructionKind.Inconclusive
    assert verdict.component_periods == (2, 3)
    assert verdict.describe() == "inconclusive: components have incompatible periods 2 3"

    assert glimca.sigma_period(sft) == [2, 3]
