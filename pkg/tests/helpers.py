"""Shared builders for randomized tests."""

import numpy as np

from gmacwt import StandardChannel, TwoUserChannel, is_feasible


def rng(seed):
    return np.random.default_rng(seed)


def random_channel(gen, k, h_low=0.0, h_high=2.0, p_high=20.0, unit="bits"):
    return StandardChannel(
        h=tuple(gen.uniform(h_low, h_high, k)),
        p_max=tuple(gen.uniform(0.0, p_high, k)),
        rate_unit=unit)


def random_box_powers(gen, ch):
    return tuple(gen.uniform(0.0, p) for p in ch.p_max)


def random_feasible_powers(gen, ch, attempts=200):
    for _ in range(attempts):
        powers = random_box_powers(gen, ch)
        if is_feasible(powers, ch)[0]:
            return powers
    return tuple(0.0 for _ in ch.p_max)


def random_case_a(gen, p_low=0.0, p_high=20.0):
    h1 = gen.uniform(0.02, 0.98)
    h2 = gen.uniform(1.0, 2.0)
    return TwoUserChannel(
        h1=h1, h2=h2,
        p1_max=gen.uniform(p_low, p_high),
        p2_max=gen.uniform(p_low, p_high))


def random_case_b(gen, p_low=0.0, p_high=20.0):
    h1 = gen.uniform(1.001, 1.9)
    h2 = h1 + gen.uniform(0.05, 1.0)
    return TwoUserChannel(
        h1=h1, h2=h2,
        p1_max=gen.uniform(p_low, p_high),
        p2_max=gen.uniform(p_low, p_high))
