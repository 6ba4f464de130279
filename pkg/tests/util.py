"""Shared helpers for the tests."""

import os

import glimca

__all__ = [
    "SAMPLES",
    "sample",
    "BINARY",
    "small_bounds",
]

SAMPLES = os.path.join(os.path.dirname(__file__), os.pardir, "samples")

BINARY = glimca.Alphabet("01")

def sample(name):
    return os.path.join(SAMPLES, name)

def small_bounds(**kwargs):
    values = dict(U=1, T_max=6, K=2, N=4, T0=4, n=2, period=16, m_max=2)
    values.update(kwargs)

    return glimca.Bounds(**values)
