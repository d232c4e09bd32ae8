"""Mod-6 wheel sieve: survivor masks, prime pair counts and estimates.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from ._core import (
    Sieve,
    bound_h,
    bound_q,
    bound_qprime,
    classify,
    constant_c12,
    constant_c14,
    constant_c24,
    eta2,
    eta4,
    is_prime,
    mertens_product,
    mu2,
    mu4,
    primes_in_wheel,
    divergence_sequence,
    value,
)

__all__ = [
    "Sieve",
    "bound_h",
    "bound_q",
    "bound_qprime",
    "classify",
    "constant_c12",
    "constant_c14",
    "constant_c24",
    "eta2",
    "eta4",
    "is_prime",
    "mertens_product",
    "mu2",
    "mu4",
    "primes_in_wheel",
    "divergence_sequence",
    "value",
]
