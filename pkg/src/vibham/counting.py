"""Counting and enumeration of the independent invariant monomials.

A normalized non-resonant Hamiltonian developed to even order N is a
polynomial in the n generators ``s_k = z_k zs_k``; its independent terms are
exactly the nonzero power vectors ``r = (r_1 .. r_n)`` with
``1 <= sum(r) <= Q0`` where ``Q0 = N // 2``.  This module enumerates them in
graded-lex order and counts them three independent ways (closed binomial
sum, two-/three-mode shortcut formulas, plain enumeration), which the test
suite plays against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

#: Power vector of the invariant generators, one entry per mode.
MonomialSignature = tuple[int, ...]

_ENUMERATION_CAP = 2**63 - 1


def max_generator_power(order: int) -> int:
    """Q0 = floor(order / 2), the largest admissible total generator power."""
    if order < 0:
        raise ValueError("order must be non-negative")
    return order // 2


@dataclass(frozen=True)
class CountSpec:
    """Mode count and (even) development order for a counting problem."""

    n_modes: int
    order: int

    def __post_init__(self) -> None:
        if self.n_modes < 1:
            raise ValueError("n_modes must be >= 1")
        if self.order < 2:
            raise ValueError("order must be >= 2")
        if self.order % 2 != 0:
            raise ValueError(
                f"order must be even (generators have degree 2), got {self.order}"
            )

    @property
    def q0(self) -> int:
        return max_generator_power(self.order)


def _compositions(total: int, parts: int) -> Iterator[MonomialSignature]:
    """Weak compositions of `total` into `parts` parts, lex ascending."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_signatures(spec: CountSpec) -> list[MonomialSignature]:
    """All generator power vectors with 1 <= total power <= Q0, graded-lex."""
    expected = count_closed(spec)
    if expected > _ENUMERATION_CAP:
        raise ValueError(
            f"enumeration would produce {expected} signatures (cap {_ENUMERATION_CAP})"
        )
    out: list[MonomialSignature] = []
    for total in range(1, spec.q0 + 1):
        out.extend(_compositions(total, spec.n_modes))
    return out


def count_closed(spec: CountSpec) -> int:
    """Number of independent monomials: sum over the support size.

    Choosing which lam of the n generators appear and how the total power
    splits over them gives ``sum_{lam=1..min(n,Q0)} C(n,lam) * C(Q0,lam)``,
    which also equals ``C(n+Q0, n) - 1``.
    """
    n, q0 = spec.n_modes, spec.q0
    return sum(comb(n, lam) * comb(q0, lam) for lam in range(1, min(n, q0) + 1))


def count_closed_n2(q0: int) -> int:
    """Two-mode shortcut: Q0 (Q0 + 3) / 2."""
    if q0 < 1:
        raise ValueError("q0 must be >= 1")
    return q0 * (q0 + 3) // 2


def count_closed_n3(q0: int) -> int:
    """Three-mode shortcut: Q0 (Q0^2 + 6 Q0 + 11) / 6.

    Note the middle coefficient: a variant with ``Q0^2 + Q0 + 11`` circulates
    in print but fails integrality (q0=4 would give 124/6); the form used
    here expands to ``3 + 3(Q0-1) + 3 Q0(Q0-1)/2 + Q0(Q0-1)(Q0-2)/6`` and
    agrees with the general closed form and with brute-force enumeration.
    """
    if q0 < 1:
        raise ValueError("q0 must be >= 1")
    return q0 * (q0 * q0 + 6 * q0 + 11) // 6


def count_compositions(total: int, parts: int) -> int:
    """Ways to write `total` as an ordered sum of `parts` positive integers."""
    if total < 1 or parts < 1:
        raise ValueError("total and parts must be >= 1")
    return comb(total - 1, parts - 1)


def additional_operators_by_order(n_modes: int, order: int) -> dict[int, int]:
    """For each even order M <= order, how many new monomials enter at M.

    A monomial of degree exactly M has total generator power M/2; there are
    ``C(M/2 + n - 1, n - 1)`` such power vectors.  Partial sums over the
    orders reproduce the total count.
    """
    spec = CountSpec(n_modes, order)  # validates n_modes and evenness
    return {
        2 * q: comb(q + spec.n_modes - 1, spec.n_modes - 1)
        for q in range(1, spec.q0 + 1)
    }


def signature_degree(signature: MonomialSignature) -> int:
    """Phase-space degree of a generator power vector: 2 * total power."""
    return 2 * sum(signature)


def signature_support(signature: MonomialSignature) -> int:
    """Number of distinct generators appearing in the monomial."""
    return sum(1 for r in signature if r > 0)
