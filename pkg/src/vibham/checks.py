"""Seeded, reproducible verification suite for the exact algebra.

Each check exercises one identity the construction rests on: bracket
antisymmetry / Jacobi / Leibniz, the adjoint eigenrelation and its link to
the bracket, kernel characterization under a non-resonant frequency vector,
time-reversal involution, numeric flow invariance of the generators, and
the counting identities.  All randomness comes from the supplied seed, so a
run is byte-reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import comb

from .algebra import (
    EC_ONE,
    ExactComplex,
    Monomial,
    Polynomial,
    adjoint_apply,
    adjoint_eigencoefficient,
    evaluate,
    flow_apply,
    harmonic_hamiltonian,
    hilbert_basis,
    poisson_bracket,
    time_reversal,
)
from .counting import CountSpec, count_closed, count_compositions, enumerate_signatures

FLOW_RELATIVE_TOL = 1e-12


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def random_fraction(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-5, 5), rng.randint(1, 4))


def random_exact_complex(rng: random.Random) -> ExactComplex:
    return ExactComplex(random_fraction(rng), random_fraction(rng))


def random_monomial(rng: random.Random, n_modes: int, max_degree: int) -> Monomial:
    degree = rng.randint(0, max_degree)
    alpha = [0] * n_modes
    beta = [0] * n_modes
    for _ in range(degree):
        side = rng.choice((alpha, beta))
        side[rng.randrange(n_modes)] += 1
    return Monomial(tuple(alpha), tuple(beta))


def random_polynomial(
    rng: random.Random, n_modes: int, max_degree: int = 6, max_terms: int = 4
) -> Polynomial:
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        coeff = random_exact_complex(rng)
        if coeff.is_zero():
            coeff = EC_ONE
        terms.append((random_monomial(rng, n_modes, max_degree), coeff))
    return Polynomial(n_modes, terms)


def nonresonant_integer_frequencies(n_modes: int, bound: int) -> list[int]:
    """Integer frequencies with no resonance of max-norm <= bound.

    Built greedily: each new frequency exceeds `bound` times the sum of the
    previous ones, so any vanishing integer combination would need a zero
    last entry, and so on down.
    """
    freqs = [1]
    while len(freqs) < n_modes:
        freqs.append(bound * sum(freqs) + 1)
    return freqs


def run_property_suite(
    n_modes: int, order: int, seed: int = 0, samples: int = 40
) -> list[CheckResult]:
    """Run every identity check; any failure flips `passed` with a detail."""
    if n_modes < 1:
        raise ValueError("n_modes must be >= 1")
    if order < 2 or order % 2 != 0:
        raise ValueError("order must be an even integer >= 2")
    rng = random.Random(seed)
    results: list[CheckResult] = []
    degree_cap = min(order, 8)

    def record(name: str, failures: list[str], detail: str) -> None:
        if failures:
            results.append(CheckResult(name, False, failures[0]))
        else:
            results.append(CheckResult(name, True, detail))

    # generator brackets vanish pairwise
    failures = []
    generators = [Polynomial.from_monomial(m) for m in hilbert_basis(n_modes)]
    for i, gi in enumerate(generators):
        for j, gj in enumerate(generators):
            if not poisson_bracket(gi, gj).is_zero():
                failures.append(f"bracket of generators {i + 1},{j + 1} is nonzero")
    record("generator-brackets-vanish", failures, f"{n_modes}^2 pairs, all zero")

    # antisymmetry, Jacobi, Leibniz on seeded random triples
    anti, jacobi, leibniz = [], [], []
    for index in range(samples):
        p = random_polynomial(rng, n_modes)
        q = random_polynomial(rng, n_modes)
        r = random_polynomial(rng, n_modes)
        if poisson_bracket(p, q) != -poisson_bracket(q, p):
            anti.append(f"sample {index}: antisymmetry broken")
        cyclic = (
            poisson_bracket(p, poisson_bracket(q, r))
            + poisson_bracket(q, poisson_bracket(r, p))
            + poisson_bracket(r, poisson_bracket(p, q))
        )
        if not cyclic.is_zero():
            jacobi.append(f"sample {index}: Jacobi sum nonzero")
        if poisson_bracket(p, q * r) != poisson_bracket(p, q) * r + q * poisson_bracket(p, r):
            leibniz.append(f"sample {index}: Leibniz rule broken")
    record("bracket-antisymmetry", anti, f"{samples} random pairs, exact")
    record("bracket-jacobi", jacobi, f"{samples} random triples, exact")
    record("bracket-leibniz", leibniz, f"{samples} random triples, exact")

    # adjoint eigenrelation and the bracket link ad(P) = {P, H0}
    freqs = [Fraction(w) for w in nonresonant_integer_frequencies(n_modes, degree_cap)]
    h0 = harmonic_hamiltonian(freqs)
    failures = []
    checked = 0
    for degree in range(degree_cap + 1):
        for mono in _monomials_of_degree(n_modes, degree):
            poly = Polynomial.from_monomial(mono)
            eig = sum(
                (w * d for w, d in zip(freqs, adjoint_eigencoefficient(mono))),
                Fraction(0),
            )
            if adjoint_apply(freqs, poly) != poly * eig:
                failures.append(f"eigenrelation broken for {mono}")
            if adjoint_apply(freqs, poly) != poisson_bracket(poly, h0):
                failures.append(f"adjoint vs bracket mismatch for {mono}")
            checked += 1
    record(
        "adjoint-eigenrelation",
        failures,
        f"{checked} monomials of degree <= {degree_cap}, exact",
    )

    # kernel membership iff alpha == beta (non-resonant frequencies)
    failures = []
    for degree in range(degree_cap + 1):
        for mono in _monomials_of_degree(n_modes, degree):
            in_kernel = adjoint_apply(freqs, Polynomial.from_monomial(mono)).is_zero()
            if in_kernel != (mono.alpha == mono.beta):
                failures.append(f"kernel characterization broken for {mono}")
    record(
        "adjoint-kernel-characterization",
        failures,
        f"degree <= {degree_cap}, kernel = generator products only",
    )

    # time reversal: involution, generators fixed
    failures = []
    for index in range(samples):
        p = random_polynomial(rng, n_modes)
        if time_reversal(time_reversal(p)) != p:
            failures.append(f"sample {index}: involution broken")
    for mono in hilbert_basis(n_modes):
        if time_reversal(Polynomial.from_monomial(mono)) != Polynomial.from_monomial(mono):
            failures.append(f"generator {mono} not fixed")
    record("time-reversal-involution", failures, f"{samples} samples + generators")

    # flow invariance of the generators, 100 seeded phase points
    failures = []
    float_freqs = [rng.uniform(0.5, 5.0) for _ in range(n_modes)]
    generators = [Polynomial.from_monomial(m) for m in hilbert_basis(n_modes)]
    for index in range(100):
        z0 = tuple(
            complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(n_modes)
        )
        t = rng.uniform(-50.0, 50.0)
        moved = flow_apply(z0, t, float_freqs)
        for g in generators:
            before = evaluate(g, z0)
            after = evaluate(g, moved)
            if abs(after - before) > FLOW_RELATIVE_TOL * (1 + abs(before)):
                failures.append(f"sample {index}: generator drifts by {abs(after - before)}")
    record("flow-preserves-generators", failures, "100 phase points, rel tol 1e-12")

    # counting: closed form vs enumeration vs binomial identity
    failures = []
    spec = CountSpec(n_modes, order)
    closed = count_closed(spec)
    enumerated = len(enumerate_signatures(spec))
    binomial = comb(n_modes + spec.q0, n_modes) - 1
    if not closed == enumerated == binomial:
        failures.append(
            f"counts disagree: closed={closed} enumerated={enumerated} binomial={binomial}"
        )
    record(
        "count-closed-form-matches-enumeration",
        failures,
        f"{closed} monomials for {n_modes} modes at order {order}",
    )

    # composition ledger: sum_r N_r = C(Q0, lam)
    failures = []
    for lam in range(1, min(n_modes, spec.q0) + 1):
        total = sum(count_compositions(r, lam) for r in range(lam, spec.q0 + 1))
        if total != comb(spec.q0, lam):
            failures.append(f"composition sum broken for support {lam}")
    record(
        "composition-count-identity",
        failures,
        f"support sizes 1..{min(n_modes, spec.q0)}",
    )

    return results


def _monomials_of_degree(n_modes: int, degree: int):
    """All monomials of exact total degree over n modes."""
    slots = 2 * n_modes
    for bars in combinations_with_replacement(range(slots), degree):
        exps = [0] * slots
        for b in bars:
            exps[b] += 1
        yield Monomial(tuple(exps[:n_modes]), tuple(exps[n_modes:]))
