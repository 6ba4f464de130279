import pytest

import glimca

from .util import *

MIN      = glimca.LocalRule.from_builtin("min")
IDENTITY = glimca.LocalRule.from_builtin("identity")
SHIFT    = glimca.LocalRule.from_builtin("shift")
SWAP     = glimca.LocalRule.from_builtin("swap")

FULL       = glimca.Sft.full_shift(BINARY)
FIXED      = glimca.Sft.from_forbidden(BINARY, ["01", "10"])
PERIOD_TWO = glimca.Sft.from_forbidden(BINARY, ["00", "11"])

def test_bounds():
    bounds = glimca.Bounds()
    assert (bounds.U, bounds.T_max, bounds.K, bounds.m_max, bounds.seed) == (3, 64, 8, 3, 0)
    assert (bounds.N, bounds.T0, bounds.n, bounds.period) == (1000, 32, 8, 256)
    assert bounds.budget == glimca.limits.enumeration_cap()

    smaller = bounds.replace(T_max=10, K=2)
    assert smaller.T_max == 10
    assert smaller.U == 3
    assert bounds.T_max == 64

    assert glimca.Bounds(budget=5).describe().startswith("U=3 T_max=64 K=8 budget=5 ")

    with pytest.raises(TypeError):
        glimca.Bounds(horizon=3)

    with pytest.raises(ValueError):
        glimca.Bounds(U=0)

    with pytest.raises(ValueError):
        glimca.Bounds(T0=65)

    with pytest.raises(ValueError):
        glimca.Bounds(seed=-1)

    with pytest.raises(ValueError):
        glimca.Bounds(K=True)

    assert glimca.Bounds(n=0, T0=0).n == 0

def test_contexts():
    pairs = glimca.contexts(BINARY, 1)

    assert len(pairs) == 9
    assert pairs[0] == ((), ())
    assert pairs[3] == (("0",), ())
    assert pairs[-1] == (("1",), ("1",))

def test_check_enables_supported():
    # Zeros stay zero under the minimum rule
    result = glimca.check_enables(MIN, glimca.Cylinder("000", 0), tuple("000"), small_bounds())

    assert result.supported
    assert result.verdict == glimca.EnablingVerdict.Supported
    assert result.witness is None
    assert result.hits == (1, 2, 3, 4, 5, 6)
    assert result.exact

    certificate = result.certificate
    assert certificate.kind == glimca.CertificateKind.EnablingSupported
    assert certificate.witness == 9
    assert certificate.seed is None
    assert certificate.replay(MIN)

def test_check_enables_refuted():
    result = glimca.check_enables(MIN, glimca.Cylinder("0", 0), ("1",), small_bounds())

    assert not result.supported
    assert result.witness == ((), ())
    assert result.hits == ()
    assert result.certificate.kind == glimca.CertificateKind.EnablingRefuted
    assert result.certificate.replay(MIN)

    # Under the shift, cell 0 sees free cells and 1 keeps showing
    assert not result.certificate.replay(SHIFT)

def test_enabling_certificates_under_brute_force():
    bounds = small_bounds()

    supported = glimca.check_enables(MIN, glimca.Cylinder("000", 0), tuple("000"), bounds)
    for t in supported.hits:
        assert tuple("000") in glimca.brute_force_image_set(MIN, glimca.Cylinder("000", 0), t, (0, 2))

    refuted  = glimca.check_enables(MIN, glimca.Cylinder("0", 0), ("1",), bounds)
    u, w     = refuted.witness
    cylinder = glimca.Cylinder("0", 0).extend(u, w)

    for t in range(1, bounds.T_max + 1):
        assert ("1",) not in glimca.brute_force_image_set(MIN, cylinder, t, (0, 0))

def test_check_enables_errors():
    with pytest.raises(ValueError):
        glimca.check_enables(MIN, glimca.Cylinder("0", 0), (), small_bounds())

    with pytest.raises(glimca.AlphabetError):
        glimca.check_enables(MIN, glimca.Cylinder("2", 0), ("0",), small_bounds())

def test_kill_time():
    bounds = small_bounds(T_max=4)

    # A fixed zero at 0 rules out 1 at once
    assert glimca.kill_time(MIN, glimca.Cylinder("0", 0), ("1",), bounds) == 0

    # 10 shows at t = 0 and never again
    assert glimca.kill_time(MIN, glimca.Cylinder("10", 0), tuple("10"), bounds) == 1

    # The boundary of an infinite run of ones never moves
    assert glimca.kill_time(MIN, glimca.Cylinder("0", 0), tuple("01"), bounds) == 5

def test_search_forcing_word():
    zeros  = glimca.LanguageSample.from_words(BINARY, [tuple("00")])
    bounds = small_bounds(U=2, T_max=4)

    result = glimca.search_forcing_word(MIN, glimca.Cylinder("0", 0), 2, bounds, zeros)

    assert result.found
    assert result.cylinder == glimca.Cylinder("00", 0)
    assert result.time == 0
    assert result.stuck is None
    assert result.certificate.kind == glimca.CertificateKind.Forcing
    assert result.certificate.replay(MIN)

def test_forcing_from_empty():
    zeros  = glimca.LanguageSample.from_words(BINARY, [tuple("00")])
    result = glimca.forcing_from_empty(MIN, 2, small_bounds(U=2, T_max=4), zeros)

    assert result.found
    assert result.cylinder == glimca.Cylinder("10", 0)
    assert result.time == 1

def assert_forced(rule, result, n, bounds, allowed):
    # Every completion shows an allowed word from T on, and something else just before
    for t in range(result.time, bounds.T_max + 1):
        assert glimca.brute_force_image_set(rule, result.cylinder, t, (0, n - 1)) <= allowed

    if result.time > 0:
        assert not glimca.brute_force_image_set(rule, result.cylinder, result.time - 1, (0, n - 1)) <= allowed

def test_forcing_certificates_under_brute_force():
    zeros  = glimca.LanguageSample.from_words(BINARY, [tuple("00")])
    bounds = small_bounds(U=2, T_max=4)

    seeded = glimca.search_forcing_word(MIN, glimca.Cylinder("0", 0), 2, bounds, zeros)
    assert_forced(MIN, seeded, 2, bounds, {tuple("00")})

    empty = glimca.forcing_from_empty(MIN, 2, bounds, zeros)
    assert_forced(MIN, empty, 2, bounds, {tuple("00")})

def test_search_forcing_word_stuck():
    # Cell 0 of the last image comes from a cell no extension fixes
    zeros  = glimca.LanguageSample.from_words(BINARY, [("0",)])
    result = glimca.forcing_from_empty(SHIFT, 1, small_bounds(), zeros)

    assert not result.found
    assert result.stuck == ("1",)
    assert result.certificate is None

def test_search_forcing_word_errors():
    zeros = glimca.LanguageSample.from_words(BINARY, [tuple("00")])

    with pytest.raises(ValueError):
        glimca.forcing_from_empty(MIN, 2, small_bounds())

    with pytest.raises(glimca.HorizonError):
        glimca.forcing_from_empty(MIN, 3, small_bounds(), zeros)

def _estimate_bounds():
    # Every run of ones in a period-16 configuration is gone after 16 steps
    return small_bounds(N=8, T0=16, T_max=16, period=16, n=3)

def test_estimate_minimum():
    sample = glimca.estimate_generic_language(MIN, _estimate_bounds(), workers=2)

    assert sample.words(3) == {("0", "0", "0")}
    assert glimca.language_profile(sample) == (1, 1, 1, 1)

    assert not sample.provenance.is_exact
    assert sample.provenance.seed == 0

@pytest.mark.slow
def test_estimate_minimum_full_scale():
    bounds = glimca.Bounds(N=1000, period=256, T0=64, T_max=96, n=8, seed=0)
    sample = glimca.estimate_generic_language(MIN, bounds)

    for n in range(1, 9):
        assert sample.words(n) == {("0",) * n}

def test_estimate_is_monotone():
    bounds = small_bounds(N=16, T0=2, T_max=10, period=24, n=4, seed=5)
    words  = glimca.estimate_generic_language(MIN, bounds).words(4)

    # Same configurations, fewer sampled times
    later = glimca.estimate_generic_language(MIN, bounds.replace(T0=6)).words(4)
    assert later <= words

    # Same configurations, more sampled times
    longer = glimca.estimate_generic_language(MIN, bounds.replace(T_max=14)).words(4)
    assert words <= longer

    # The first samples are the same
    more = glimca.estimate_generic_language(MIN, bounds.replace(N=32)).words(4)
    assert words <= more

def test_estimate_does_not_depend_on_workers():
    bounds = small_bounds(N=9, T0=2, T_max=5, period=12, n=3, seed=7)

    one   = glimca.estimate_generic_language(glimca.ElementaryRule(110), bounds, workers=1)
    three = glimca.estimate_generic_language(glimca.ElementaryRule(110), bounds, workers=3)

    assert one.words(3) == three.words(3)
    assert one == three

def test_estimate_edge_cases():
    empty = glimca.estimate_generic_language(MIN, small_bounds(n=0))
    assert empty.max_length == 0

    with pytest.raises(glimca.BudgetExceeded):
        glimca.estimate_generic_language(MIN, small_bounds(n=62))

def test_classifier_identity():
    classification = glimca.restriction_classifier(IDENTITY, FULL, 2)

    assert classification.kind == glimca.RestrictionKind.Identity
    assert classification.shift == 0
    assert classification.period == (0, 1)
    assert classification.oblique is None
    assert classification.neighborhoods == {1: (0, 0), 2: (0, 0)}
    assert classification.describe() == "identity"

def test_classifier_shift():
    classification = glimca.restriction_classifier(SHIFT, FULL, 2)

    assert classification.kind == glimca.RestrictionKind.Shift
    assert classification.shift == 1
    assert classification.oblique == 1
    assert classification.neighborhoods == {1: (1, 1), 2: (2, 2)}
    assert classification.rates[2] == (1, 1)
    assert classification.certificate.replay(SHIFT)

def test_classifier_periodic():
    classification = glimca.restriction_classifier(SWAP, FULL, 2)

    assert classification.kind == glimca.RestrictionKind.EventuallyPeriodic
    assert classification.period == (0, 2)
    assert classification.describe() == "eventually-periodic(k=0, p=2)"

    # On the two fixed points, the right neighbor says which one a point is
    on_fixed = glimca.restriction_classifier(SWAP, FIXED, 2)
    assert on_fixed.describe() == "eventually-periodic(k=0, p=2), eventually-oblique"

def test_classifier_other():
    classification = glimca.restriction_classifier(MIN, FULL, 2)

    assert classification.kind == glimca.RestrictionKind.Other
    assert classification.describe() == "other"
    assert classification.neighborhoods[1] == (0, 1)

def test_minimal_neighborhood_constant():
    zeros = glimca.Sft.from_forbidden(BINARY, ["1"])

    assert glimca.minimal_neighborhood(MIN, zeros, 1) is None

    classification = glimca.restriction_classifier(MIN, zeros, 1)
    assert classification.kind == glimca.RestrictionKind.Identity
    assert classification.rates == {1: None}

def test_classifier_errors():
    with pytest.raises(glimca.AlphabetError):
        glimca.restriction_classifier(MIN, glimca.Sft.full_shift(glimca.Alphabet("012")), 1)

    with pytest.raises(glimca.EmptySubshiftError):
        glimca.restriction_classifier(MIN, glimca.Sft.from_forbidden(BINARY, ["0", "1"]), 1)

def test_report_obstruction():
    report = glimca.realizability_report(PERIOD_TWO, horizon=4)

    assert report.excluded
    assert [line.check for line in report.lines] == ["obstruction", "mixing", "chain transitivity", "chain components"]
    assert "cannot be the generic limit set" in report.exclusions[0]
    assert report.evidence == "exact"

def test_report_shift_needs_chain_transitivity():
    step   = glimca.orbit_closure_sample(BINARY, glimca.Configuration.two_sided("0", "", "1"), 3)
    report = glimca.realizability_report(step, SHIFT, bounds=small_bounds())

    assert report.exclusions == (
        "shift restriction forces chain transitivity: cannot be the generic limit set for shift",
    )

def test_report_identity_needs_mixing():
    report = glimca.realizability_report(FIXED, IDENTITY, horizon=3, bounds=small_bounds())

    assert report.exclusions == (
        "identity restriction forces mixing: cannot be the generic limit set for identity",
        "components are not cyclically permuted: cannot be the generic limit set for identity",
    )

def test_report_no_exclusions():
    report = glimca.realizability_report(FULL, IDENTITY, horizon=3, bounds=small_bounds())

    assert not report.excluded
    assert len(report.lines) == 6
    assert report.to_text().endswith("no exclusions\n")

    rows = report.to_csv().splitlines()
    assert rows[0] == "check,hypothesis,citation,result,horizon,evidence"
    assert len(rows) == 7

    swapped = glimca.realizability_report(FIXED, SWAP, horizon=3, bounds=small_bounds())
    assert not swapped.excluded

def test_report_sampled_evidence():
    sample = glimca.estimate_generic_language(MIN, _estimate_bounds())
    report = glimca.realizability_report(sample, MIN, bounds=small_bounds())

    assert report.evidence == "seed=0 T0=16 T_max=16"
    assert not report.excluded

def test_report_edge_cases():
    empty  = glimca.Sft.from_forbidden(BINARY, ["0", "1"])
    report = glimca.realizability_report(empty, horizon=3)

    assert report.lines == ()
    assert report.to_text() == "no exclusions\n"

    with pytest.raises(TypeError):
        glimca.realizability_report("01")
