import math

import pytest

from gmacwt import (
    StandardChannel,
    TwoUserChannel,
    ValidationError,
    jam_objective,
    jam_roots,
    no_jam_power_threshold,
    p1_stationarity,
    p2_stationarity,
    silence_threshold,
    solve_case_a,
    solve_case_b,
    solve_jamming,
)

from helpers import random_case_a, random_case_b, rng

# High-precision reference values (50-digit evaluation of the closed forms).
A_ROOT = 0.49021623019079503       # h=(0.4,1.4), p1=10
A_ROOT_LO = -1.690216230190795
A_RATE = 0.59659250286014471       # objective at (10, A_ROOT), bits
A_RATE_NO_JAM = 0.56875176187496745   # objective at (10, 0)
A_RATE_FULL = 0.58899915098899724     # objective at (10, 0.2)
B_ROOT = 5.5355736761107267        # h=(1.2,1.4), p1=10
B_RATE = 0.046706065296348544      # objective at (10, B_ROOT), bits
B_RATE_FULL = 0.040764942748299164    # objective at (10, 3)

CASE_A_CH = TwoUserChannel(h1=0.4, h2=1.4, p1_max=10, p2_max=10)
CASE_B_CH = TwoUserChannel(h1=1.2, h2=1.4, p1_max=10, p2_max=20)


def test_two_user_channel_requires_sorted_gains():
    with pytest.raises(ValidationError, match="h1"):
        TwoUserChannel(h1=1.4, h2=0.4, p1_max=1, p2_max=1)


def test_from_standard_relabels_users():
    ch = StandardChannel(h=(1.4, 0.4), p_max=(3, 7))
    two, perm = TwoUserChannel.from_standard(ch)
    assert (two.h1, two.h2) == (0.4, 1.4)
    assert (two.p1_max, two.p2_max) == (7.0, 3.0)
    assert perm == (1, 0)
    with pytest.raises(ValidationError, match="users"):
        TwoUserChannel.from_standard(StandardChannel(h=(0.5,), p_max=(1,)))


def test_jam_objective_values():
    assert jam_objective(0, 5, CASE_A_CH) == 0.0
    assert jam_objective(10, 0, CASE_A_CH) == pytest.approx(A_RATE_NO_JAM, abs=1e-12)
    assert jam_objective(10, A_ROOT, CASE_A_CH) == pytest.approx(A_RATE, abs=1e-12)
    # Jamming beats staying silent here.
    assert jam_objective(10, A_ROOT, CASE_A_CH) > jam_objective(10, 0, CASE_A_CH)


def test_p1_stationarity_values():
    assert p1_stationarity(0, CASE_A_CH) == pytest.approx(-0.6, abs=1e-15)
    b = TwoUserChannel(h1=1.2, h2=1.4, p1_max=1, p2_max=1)
    assert p1_stationarity(1.0, b) == pytest.approx(0.0, abs=1e-15)
    assert p1_stationarity(0.0, b) == pytest.approx(0.2, abs=1e-15)


def test_p1_stationarity_always_negative_in_case_a():
    gen = rng(41)
    for _ in range(100):
        ch = random_case_a(gen)
        assert p1_stationarity(gen.uniform(0, 30), ch) < 0


def test_jam_roots_case_a():
    disc, lo, hi = jam_roots(10, CASE_A_CH)
    assert disc == pytest.approx(2.3296, abs=1e-12)
    assert hi == pytest.approx(A_ROOT, abs=1e-12)
    assert lo == pytest.approx(A_ROOT_LO, abs=1e-12)
    assert lo <= hi
    assert lo < 0  # always in case A


def test_jam_roots_case_b():
    disc, lo, hi = jam_roots(10, CASE_B_CH)
    assert disc == pytest.approx(1.6128, abs=1e-12)
    assert hi == pytest.approx(B_ROOT, abs=1e-11)


def test_jam_roots_tap_gain_exactly_one():
    ch = TwoUserChannel(h1=0.3, h2=1.0, p1_max=5, p2_max=5)
    disc, lo, hi = jam_roots(7.0, ch)
    assert disc == 0.0
    assert lo == hi == -1.0  # double negative root: jamming never helps


def test_jam_roots_validation():
    with pytest.raises(ValidationError, match="h2"):
        jam_roots(1.0, TwoUserChannel(h1=1.3, h2=1.3, p1_max=1, p2_max=1))
    with pytest.raises(ValidationError, match="h2"):
        jam_roots(1.0, TwoUserChannel(h1=0.1, h2=0.9, p1_max=1, p2_max=1))


def test_p2_stationarity_matches_numeric_derivative():
    # The stationarity numerator equals the p2-derivative of the negated
    # SNR-product ratio times (1+p2)^2 * (1+h1*p1+h2*p2)^2.
    gen = rng(42)
    checked = 0
    while checked < 20:
        ch = random_case_a(gen) if checked % 2 == 0 else random_case_b(gen)
        p1 = gen.uniform(0.1, 15)
        p2 = gen.uniform(0.0, 10)

        def ratio(q, ch=ch, p1=p1):
            return -((1 + p1 + q) * (1 + ch.h2 * q)
                     / ((1 + q) * (1 + ch.h1 * p1 + ch.h2 * q)))

        d = 1e-5
        numeric = (ratio(p2 + d) - ratio(p2 - d)) / (2 * d)
        denom = (1 + p2) ** 2 * (1 + ch.h1 * p1 + ch.h2 * p2) ** 2
        assert p2_stationarity(p1, p2, ch) / denom == pytest.approx(numeric, rel=1e-6, abs=1e-8)
        checked += 1


def test_solve_case_a_interior_root():
    sol = solve_case_a(CASE_A_CH)
    assert sol.p1 == 10.0
    assert sol.p2 == pytest.approx(A_ROOT, abs=1e-12)
    assert sol.secrecy_rate == pytest.approx(A_RATE, abs=1e-12)
    assert sol.branch == "InteriorRoot"
    assert sol.case_tag == "A"


def test_solve_case_a_no_jam():
    sol = solve_case_a(TwoUserChannel(h1=0.4, h2=1.4, p1_max=1, p2_max=10))
    assert (sol.p1, sol.p2) == (1.0, 0.0)
    assert sol.branch == "NoJam"
    _, _, hi = jam_roots(1.0, CASE_A_CH)
    assert hi == pytest.approx(-0.2, abs=1e-12)


def test_solve_case_a_full_jam():
    sol = solve_case_a(TwoUserChannel(h1=0.4, h2=1.4, p1_max=10, p2_max=0.2))
    assert (sol.p1, sol.p2) == (10.0, 0.2)
    assert sol.branch == "FullJam"
    assert sol.secrecy_rate == pytest.approx(A_RATE_FULL, abs=1e-12)


def test_solve_case_a_rejects_other_regimes():
    with pytest.raises(ValidationError, match="case A"):
        solve_case_a(CASE_B_CH)


def test_solve_case_b_interior_root():
    sol = solve_case_b(CASE_B_CH)
    assert sol.p1 == 10.0
    assert sol.p2 == pytest.approx(B_ROOT, abs=1e-11)
    assert sol.secrecy_rate == pytest.approx(B_RATE, abs=1e-12)
    assert sol.branch == "InteriorRoot"
    assert sol.case_tag == "B"
    # Positive secrecy rate although both single-user secrecy capacities
    # are zero.
    assert sol.secrecy_rate > 0


def test_solve_case_b_all_silent():
    sol = solve_case_b(TwoUserChannel(h1=1.2, h2=1.4, p1_max=10, p2_max=0.5))
    assert (sol.p1, sol.p2, sol.secrecy_rate) == (0.0, 0.0, 0.0)
    assert sol.branch == "AllSilent"
    assert silence_threshold(CASE_B_CH) == pytest.approx(1.0, abs=1e-15)


def test_solve_case_b_full_jam():
    sol = solve_case_b(TwoUserChannel(h1=1.2, h2=1.4, p1_max=10, p2_max=3))
    assert (sol.p1, sol.p2) == (10.0, 3.0)
    assert sol.branch == "FullJam"
    assert sol.secrecy_rate == pytest.approx(B_RATE_FULL, abs=1e-12)


def test_solve_jamming_dispatch():
    # Both gains below one: the sum-rate optimum, nobody jams.
    sol = solve_jamming(TwoUserChannel(h1=0.1, h2=0.2, p1_max=10, p2_max=10))
    assert (sol.p1, sol.p2) == (10.0, 0.0)
    assert sol.branch == "NoJam"
    assert sol.case_tag == "Degenerate"
    assert sol.secrecy_rate == pytest.approx(1.2297158093186486, abs=1e-12)

    # Equal gains >= 1: jamming has no relative advantage.
    sol = solve_jamming(TwoUserChannel(h1=1.3, h2=1.3, p1_max=10, p2_max=10))
    assert (sol.p1, sol.p2, sol.secrecy_rate) == (0.0, 0.0, 0.0)
    assert sol.branch == "AllSilent"
    assert sol.case_tag == "Degenerate"

    assert solve_jamming(CASE_A_CH).case_tag == "A"
    assert solve_jamming(CASE_B_CH).case_tag == "B"


def test_solve_jamming_zero_transmit_power():
    sol = solve_jamming(TwoUserChannel(h1=0.4, h2=1.4, p1_max=0, p2_max=10))
    assert (sol.p1, sol.p2, sol.secrecy_rate) == (0.0, 0.0, 0.0)


def test_no_jam_threshold_zeroes_the_root():
    gen = rng(43)
    for _ in range(50):
        h1 = gen.uniform(0.05, 0.95)
        h2 = gen.uniform(1.0001, min(2.0, 0.999 / h1))
        ch = TwoUserChannel(h1=h1, h2=h2, p1_max=1, p2_max=1)
        thr = no_jam_power_threshold(ch)
        assert thr > 0
        _, _, hi = jam_roots(thr, ch)
        assert abs(hi) <= 1e-9
        # Below the threshold the root is negative, above it positive.
        assert jam_roots(thr * 0.9, ch)[2] < 0
        assert jam_roots(thr * 1.1, ch)[2] > 0


def test_no_jam_threshold_special_cases():
    assert no_jam_power_threshold(
        TwoUserChannel(h1=0.8, h2=1.5, p1_max=1, p2_max=1)) == 0.0   # h1*h2 >= 1
    assert no_jam_power_threshold(
        TwoUserChannel(h1=0.3, h2=1.0, p1_max=1, p2_max=1)) == math.inf
    with pytest.raises(ValidationError, match="h"):
        no_jam_power_threshold(CASE_B_CH)


def test_jammer_always_helps_when_gain_product_exceeds_one():
    gen = rng(44)
    for _ in range(100):
        h1 = gen.uniform(0.5, 0.999)
        h2 = gen.uniform(1.0 / h1, 1.0 / h1 + 1.0)
        ch = TwoUserChannel(h1=h1, h2=h2, p1_max=gen.uniform(1e-6, 20), p2_max=10)
        _, _, hi = jam_roots(ch.p1_max, ch)
        assert hi > 0
        sol = solve_case_a(ch)
        assert sol.p2 > 0
        assert sol.secrecy_rate >= jam_objective(ch.p1_max, 0, ch) - 1e-12


def test_case_a_objective_unimodal_around_root():
    gen = rng(45)
    for _ in range(10):
        ch = random_case_a(gen, p_low=0.5)
        _, _, hi = jam_roots(ch.p1_max, ch)
        step = 1e-3
        values = [jam_objective(ch.p1_max, i * step, ch)
                  for i in range(int(ch.p2_max / step) + 1)]
        for i in range(len(values) - 1):
            left, right = i * step, (i + 1) * step
            if right <= hi:
                assert values[i + 1] >= values[i] - 1e-12
            elif left >= hi:
                assert values[i + 1] <= values[i] + 1e-12


def test_case_a_jamming_never_hurts():
    gen = rng(46)
    for _ in range(100):
        ch = random_case_a(gen)
        sol = solve_case_a(ch)
        baseline = jam_objective(ch.p1_max, 0, ch) if ch.p1_max > 0 else 0.0
        assert sol.secrecy_rate >= baseline - 1e-12
        _, _, hi = jam_roots(ch.p1_max, ch) if ch.p1_max > 0 else (0, 0, 0.0)
        if hi > 1e-6 and ch.p2_max > 0:
            assert sol.secrecy_rate > baseline
        if hi <= 0:
            assert sol.p2 == 0.0


def test_case_b_root_exceeds_silence_threshold():
    gen = rng(47)
    for _ in range(100):
        ch = random_case_b(gen, p_low=1e-3)
        assert jam_roots(ch.p1_max, ch)[2] > silence_threshold(ch) - 1e-12


def test_solution_rate_unit_passthrough():
    sol_bits = solve_jamming(CASE_A_CH, "bits")
    sol_nats = solve_jamming(CASE_A_CH, "nats")
    assert sol_bits.p2 == sol_nats.p2
    assert sol_nats.secrecy_rate == pytest.approx(
        sol_bits.secrecy_rate * math.log(2), abs=1e-12)


def test_jamming_solution_json_document():
    doc = solve_case_a(CASE_A_CH).to_json_dict(permutation=(1, 0))
    assert doc["powers"] == [10.0, pytest.approx(A_ROOT, abs=1e-12)]
    assert doc["branch"] == "InteriorRoot"
    assert doc["case_tag"] == "A"
    assert doc["permutation"] == [2, 1]
    assert doc["rate_unit"] == "bits"
