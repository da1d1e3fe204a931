"""Multiplication tables of a few standard orders.

``gaussian``     Z[i]
``sqrt_m2``      Z[sqrt(-2)]
``sqrt_m5``      Z[sqrt(-5)]
``eisenstein``   Z[zeta_3]
``cubic_23``     Z[t], t^3 = t + 1 (maximal; discriminant -23)
``cyclotomic8``  Z[zeta_8] (rank 4)

Each is a monogenic order ``Z[t]/(f)`` on the power basis ``1, t, ..., t^(n-1)``.
"""

from __future__ import annotations

import json
from importlib import resources
from typing import Sequence

from primeideal.order import OrderPresentation

# monic defining polynomials, coefficients lowest degree first (leading 1 omitted)
POLYNOMIALS: dict[str, tuple[int, ...]] = {
    "gaussian": (1, 0),
    "sqrt_m2": (2, 0),
    "sqrt_m5": (5, 0),
    "eisenstein": (1, 1),
    "cubic_23": (-1, -1, 0),
    "cyclotomic8": (1, 0, 0, 0),
}


def power_basis_order(coeffs: Sequence[int]) -> OrderPresentation:
    """Table of ``Z[t]/(t^n + c_(n-1) t^(n-1) + ... + c_0)`` on ``1, t, ..., t^(n-1)``."""
    n = len(coeffs)
    # reduce t^e for e < 2n - 1 to the power basis
    powers = []
    for e in range(2 * n - 1):
        if e < n:
            powers.append([1 if j == e else 0 for j in range(n)])
        else:
            prev = powers[-1]
            top = prev[-1]
            shifted = [0] + prev[:-1]
            powers.append([s - top * c for s, c in zip(shifted, coeffs)])
    table = [[powers[i + j] for j in range(n)] for i in range(n)]
    return OrderPresentation.build(table, [1] + [0] * (n - 1))


def fixture(name: str) -> OrderPresentation:
    """Load a shipped fixture by name."""
    if name not in POLYNOMIALS:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(POLYNOMIALS)}")
    text = resources.files("primeideal.data").joinpath(f"{name}.json").read_text()
    return OrderPresentation.from_json(json.loads(text))


def all_fixtures() -> dict[str, OrderPresentation]:
    return {name: fixture(name) for name in POLYNOMIALS}
