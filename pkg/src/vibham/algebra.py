"""Exact algebra of the harmonic-oscillator invariant ring.

Polynomials live in the complex polynomial ring C(z, z*) over n oscillator
modes.  Coefficients are exact rational complex numbers, so algebraic
identities (bracket antisymmetry, the adjoint eigenrelation, generator
commutation) can be asserted with ``==`` instead of a floating tolerance.
Floating point enters only at the numeric boundaries: :func:`evaluate`,
:func:`flow_apply` and :func:`find_resonance`.

Conventions:

* a monomial is ``z_1^a1 zs_1^b1 ... z_n^an zs_n^bn`` where ``zs_k`` denotes
  the complex conjugate variable of ``z_k``;
* the Poisson bracket is ``{P, Q} = i * sum_k (dP/dzs_k dQ/dz_k
  - dP/dz_k dQ/dzs_k)``, so that ``{z_j, zs_k} = -i delta_jk``;
* the quadratic oscillator Hamiltonian is ``H0 = -i sum_k w_k z_k zs_k`` and
  its adjoint action on a monomial multiplies it by
  ``sum_k w_k (b_k - a_k)``.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isfinite
from typing import Iterable, Iterator, Mapping, Sequence, Union

RationalLike = Union[int, Fraction]

#: Hard cap on the resonance search space, candidates = (2*bound+1)**n - 1.
RESONANCE_SEARCH_CAP = 10**8


def _as_fraction(value: RationalLike, what: str = "value") -> Fraction:
    """Coerce int/Fraction to Fraction, rejecting floats (silent rounding)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(
        f"{what} must be an int or Fraction for exact arithmetic, "
        f"got {type(value).__name__}; use Fraction('739.685')-style values"
    )


@dataclass(frozen=True)
class ExactComplex:
    """A complex number with exact rational real and imaginary parts."""

    re: Fraction
    im: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", _as_fraction(self.re, "real part"))
        object.__setattr__(self, "im", _as_fraction(self.im, "imaginary part"))

    def __add__(self, other: "ExactComplex") -> "ExactComplex":
        other = _coerce_scalar(other)
        return ExactComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: "ExactComplex") -> "ExactComplex":
        other = _coerce_scalar(other)
        return ExactComplex(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "ExactComplex":
        return ExactComplex(-self.re, -self.im)

    def __mul__(self, other: Union["ExactComplex", RationalLike]) -> "ExactComplex":
        other = _coerce_scalar(other)
        return ExactComplex(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "ExactComplex":
        return ExactComplex(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __str__(self) -> str:
        return format_coefficient(self)


def _coerce_scalar(value: Union[ExactComplex, RationalLike]) -> ExactComplex:
    if isinstance(value, ExactComplex):
        return value
    return ExactComplex(_as_fraction(value, "scalar"))


EC_ZERO = ExactComplex(Fraction(0))
EC_ONE = ExactComplex(Fraction(1))
EC_I = ExactComplex(Fraction(0), Fraction(1))
EC_MINUS_I = ExactComplex(Fraction(0), Fraction(-1))


@dataclass(frozen=True)
class Monomial:
    """Exponent pair (alpha, beta): powers of z_k and zs_k per mode."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", tuple(self.alpha))
        object.__setattr__(self, "beta", tuple(self.beta))
        if len(self.alpha) != len(self.beta):
            raise ValueError(
                f"exponent vectors differ in length: {len(self.alpha)} vs {len(self.beta)}"
            )
        if not self.alpha:
            raise ValueError("a monomial needs at least one mode")
        for e in self.alpha + self.beta:
            if not isinstance(e, int) or e < 0:
                raise ValueError(f"exponents must be non-negative integers, got {e!r}")

    @property
    def n_modes(self) -> int:
        return len(self.alpha)

    def degree(self) -> int:
        return sum(self.alpha) + sum(self.beta)

    def weight(self) -> tuple[int, ...]:
        """Integer vector (beta_k - alpha_k); the adjoint eigencoefficient."""
        return tuple(b - a for a, b in zip(self.alpha, self.beta))

    def times(self, other: "Monomial") -> "Monomial":
        if other.n_modes != self.n_modes:
            raise ValueError("mode-count mismatch in monomial product")
        return Monomial(
            tuple(a + b for a, b in zip(self.alpha, other.alpha)),
            tuple(a + b for a, b in zip(self.beta, other.beta)),
        )

    def swapped(self) -> "Monomial":
        """The time-reversed monomial (alpha and beta exchanged)."""
        return Monomial(self.beta, self.alpha)

    def grading_key(self) -> tuple[int, tuple[int, ...]]:
        """Graded-lex sort key on the concatenated (alpha, beta) vector."""
        return (self.degree(), self.alpha + self.beta)

    @classmethod
    def unit(cls, n_modes: int) -> "Monomial":
        return cls((0,) * n_modes, (0,) * n_modes)

    @classmethod
    def variable(cls, n_modes: int, mode: int, conjugated: bool = False) -> "Monomial":
        """z_mode (or zs_mode), 1-based mode index."""
        if not 1 <= mode <= n_modes:
            raise ValueError(f"mode index {mode} out of range 1..{n_modes}")
        exps = [0] * n_modes
        exps[mode - 1] = 1
        zero = (0,) * n_modes
        if conjugated:
            return cls(zero, tuple(exps))
        return cls(tuple(exps), zero)


class Polynomial:
    """Finite map monomial -> exact complex coefficient, zero terms dropped."""

    __slots__ = ("n_modes", "_terms")

    def __init__(
        self,
        n_modes: int,
        terms: Union[Mapping[Monomial, ExactComplex], Iterable[tuple[Monomial, ExactComplex]]] = (),
    ) -> None:
        if n_modes < 1:
            raise ValueError("n_modes must be >= 1")
        self.n_modes = n_modes
        canonical: dict[Monomial, ExactComplex] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            if mono.n_modes != n_modes:
                raise ValueError(
                    f"monomial over {mono.n_modes} modes in a {n_modes}-mode polynomial"
                )
            coeff = _coerce_scalar(coeff)
            acc = canonical.get(mono)
            coeff = coeff if acc is None else acc + coeff
            if coeff.is_zero():
                canonical.pop(mono, None)
            else:
                canonical[mono] = coeff
        self._terms = canonical

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n_modes: int) -> "Polynomial":
        return cls(n_modes)

    @classmethod
    def constant(cls, n_modes: int, value: Union[ExactComplex, RationalLike]) -> "Polynomial":
        return cls(n_modes, [(Monomial.unit(n_modes), _coerce_scalar(value))])

    @classmethod
    def from_monomial(
        cls, mono: Monomial, coeff: Union[ExactComplex, RationalLike] = 1
    ) -> "Polynomial":
        return cls(mono.n_modes, [(mono, _coerce_scalar(coeff))])

    @classmethod
    def variable(cls, n_modes: int, mode: int, conjugated: bool = False) -> "Polynomial":
        return cls.from_monomial(Monomial.variable(n_modes, mode, conjugated))

    @classmethod
    def generator(cls, n_modes: int, mode: int) -> "Polynomial":
        """The invariant generator z_mode * zs_mode."""
        if not 1 <= mode <= n_modes:
            raise ValueError(f"mode index {mode} out of range 1..{n_modes}")
        exps = [0] * n_modes
        exps[mode - 1] = 1
        return cls.from_monomial(Monomial(tuple(exps), tuple(exps)))

    # -- views -------------------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, ExactComplex]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, ExactComplex]]:
        """Terms in graded-lex order (the canonical printing order)."""
        return sorted(self._terms.items(), key=lambda kv: kv[0].grading_key())

    def coefficient(self, mono: Monomial) -> ExactComplex:
        return self._terms.get(mono, EC_ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, ExactComplex]]:
        return iter(self._terms.items())

    def degree(self) -> int:
        return max((m.degree() for m in self._terms), default=0)

    # -- arithmetic ----------------------------------------------------------

    def _require_same_modes(self, other: "Polynomial") -> None:
        if self.n_modes != other.n_modes:
            raise ValueError(
                f"mode-count mismatch: {self.n_modes} vs {other.n_modes}"
            )

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._require_same_modes(other)
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            acc = out.get(mono)
            s = coeff if acc is None else acc + coeff
            if s.is_zero():
                out.pop(mono, None)
            else:
                out[mono] = s
        result = Polynomial.zero(self.n_modes)
        result._terms = out
        return result

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        result = Polynomial.zero(self.n_modes)
        result._terms = {m: -c for m, c in self._terms.items()}
        return result

    def __mul__(self, other: Union["Polynomial", ExactComplex, RationalLike]) -> "Polynomial":
        if not isinstance(other, Polynomial):
            scalar = _coerce_scalar(other)
            if scalar.is_zero():
                return Polynomial.zero(self.n_modes)
            result = Polynomial.zero(self.n_modes)
            result._terms = {m: c * scalar for m, c in self._terms.items()}
            return result
        self._require_same_modes(other)
        out: dict[Monomial, ExactComplex] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                mono = ma.times(mb)
                coeff = ca * cb
                acc = out.get(mono)
                s = coeff if acc is None else acc + coeff
                if s.is_zero():
                    out.pop(mono, None)
                else:
                    out[mono] = s
        result = Polynomial.zero(self.n_modes)
        result._terms = out
        return result

    def __rmul__(self, other: Union[ExactComplex, RationalLike]) -> "Polynomial":
        return self * other

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n_modes == other.n_modes and self._terms == other._terms

    __hash__ = None  # type: ignore[assignment]

    # -- calculus ------------------------------------------------------------

    def diff_z(self, mode: int) -> "Polynomial":
        """Partial derivative with respect to z_mode (1-based)."""
        return self._diff(mode, conjugated=False)

    def diff_zs(self, mode: int) -> "Polynomial":
        """Partial derivative with respect to zs_mode (1-based)."""
        return self._diff(mode, conjugated=True)

    def _diff(self, mode: int, conjugated: bool) -> "Polynomial":
        if not 1 <= mode <= self.n_modes:
            raise ValueError(f"mode index {mode} out of range 1..{self.n_modes}")
        k = mode - 1
        out: dict[Monomial, ExactComplex] = {}
        for mono, coeff in self._terms.items():
            exps = mono.beta if conjugated else mono.alpha
            e = exps[k]
            if e == 0:
                continue
            lowered = list(exps)
            lowered[k] = e - 1
            if conjugated:
                new = Monomial(mono.alpha, tuple(lowered))
            else:
                new = Monomial(tuple(lowered), mono.beta)
            c = coeff * e
            acc = out.get(new)
            s = c if acc is None else acc + c
            if s.is_zero():
                out.pop(new, None)
            else:
                out[new] = s
        result = Polynomial.zero(self.n_modes)
        result._terms = out
        return result

    # -- display -------------------------------------------------------------

    def __str__(self) -> str:
        return polynomial_to_text(self)

    def __repr__(self) -> str:
        return f"Polynomial({self.n_modes}, {polynomial_to_text(self)!r})"


# ---------------------------------------------------------------------------
# canonical text form
# ---------------------------------------------------------------------------


def format_fraction(value: Fraction) -> str:
    return str(value)


def format_coefficient(coeff: ExactComplex) -> str:
    """Render a coefficient so the polynomial grammar can read it back."""
    if coeff.im == 0:
        return format_fraction(coeff.re)
    if coeff.re == 0:
        return f"{format_fraction(coeff.im)}i"
    sign = "+" if coeff.im > 0 else "-"
    return f"({format_fraction(coeff.re)}{sign}{format_fraction(abs(coeff.im))}i)"


def _format_monomial(mono: Monomial) -> str:
    factors: list[str] = []
    for k in range(mono.n_modes):
        if mono.alpha[k]:
            factors.append(f"z{k + 1}" + (f"^{mono.alpha[k]}" if mono.alpha[k] > 1 else ""))
        if mono.beta[k]:
            factors.append(f"zs{k + 1}" + (f"^{mono.beta[k]}" if mono.beta[k] > 1 else ""))
    return "*".join(factors)


def polynomial_to_text(poly: Polynomial) -> str:
    """Canonical text form: graded-lex term order, grammar-compatible."""
    if poly.is_zero():
        return "0"
    parts: list[str] = []
    for index, (mono, coeff) in enumerate(poly.sorted_terms()):
        negative = coeff.re < 0 or (coeff.re == 0 and coeff.im < 0)
        display = -coeff if negative else coeff
        mono_text = _format_monomial(mono)
        if not mono_text:
            body = format_coefficient(display)
        elif display == EC_ONE:
            body = mono_text
        else:
            body = f"{format_coefficient(display)} {mono_text}"
        if index == 0:
            parts.append(("-" if negative else "") + body)
        else:
            parts.append(("- " if negative else "+ ") + body)
    return " ".join(parts)


# ---------------------------------------------------------------------------
# ring operations
# ---------------------------------------------------------------------------


def poisson_bracket(p: Polynomial, q: Polynomial) -> Polynomial:
    """Exact Poisson bracket {p, q} on C(z, z*).

    Works term pair by term pair: the k-th summand of the bracket of two
    monomials carries the integer factor ``b_k a'_k - a_k b'_k`` and lowers
    both the z_k and zs_k exponents of the product by one.
    """
    if p.n_modes != q.n_modes:
        raise ValueError(f"mode-count mismatch: {p.n_modes} vs {q.n_modes}")
    n = p.n_modes
    out: dict[Monomial, ExactComplex] = {}
    for ma, ca in p._terms.items():
        for mb, cb in q._terms.items():
            cab = ca * cb
            for k in range(n):
                factor = ma.beta[k] * mb.alpha[k] - ma.alpha[k] * mb.beta[k]
                if factor == 0:
                    continue
                alpha = list(ma.alpha)
                beta = list(ma.beta)
                for i in range(n):
                    alpha[i] += mb.alpha[i]
                    beta[i] += mb.beta[i]
                alpha[k] -= 1
                beta[k] -= 1
                mono = Monomial(tuple(alpha), tuple(beta))
                coeff = EC_I * cab * factor
                acc = out.get(mono)
                s = coeff if acc is None else acc + coeff
                if s.is_zero():
                    out.pop(mono, None)
                else:
                    out[mono] = s
    result = Polynomial.zero(n)
    result._terms = out
    return result


def adjoint_eigencoefficient(mono: Monomial) -> tuple[int, ...]:
    """Integer weight vector (beta_k - alpha_k) of a monomial.

    Dotting it with the frequency vector gives the adjoint eigenvalue; the
    zero vector characterises kernel monomials under any non-resonant
    frequency choice.
    """
    return mono.weight()


def adjoint_apply(freqs: Sequence[RationalLike], p: Polynomial) -> Polynomial:
    """Apply the adjoint of the quadratic Hamiltonian, exactly.

    Each monomial is an eigenvector: it is scaled by
    ``sum_k freqs[k] * (beta_k - alpha_k)``.  Frequencies must be exact
    rationals (int or Fraction) so the result stays exact.
    """
    if len(freqs) != p.n_modes:
        raise ValueError(f"mode-count mismatch: {len(freqs)} freqs vs {p.n_modes} modes")
    omega = [_as_fraction(w, "frequency") for w in freqs]
    out: dict[Monomial, ExactComplex] = {}
    for mono, coeff in p._terms.items():
        eig = sum((w * d for w, d in zip(omega, mono.weight())), Fraction(0))
        if eig == 0:
            continue
        out[mono] = coeff * eig
    result = Polynomial.zero(p.n_modes)
    result._terms = out
    return result


def kernel_test(mono: Monomial, freqs: Sequence[Union[float, RationalLike]], tol: float = 0.0) -> bool:
    """True iff the monomial is annihilated by the adjoint operator.

    With a zero weight vector the answer is exact and tolerance-free;
    otherwise ``|sum_k w_k (beta_k - alpha_k)| <= tol`` is checked with the
    arithmetic of the supplied frequency values.
    """
    if len(freqs) != mono.n_modes:
        raise ValueError(f"mode-count mismatch: {len(freqs)} freqs vs {mono.n_modes} modes")
    if tol < 0:
        raise ValueError("tol must be >= 0")
    weight = mono.weight()
    if all(d == 0 for d in weight):
        return True
    return abs(sum(w * d for w, d in zip(freqs, weight))) <= tol


def time_reversal(p: Polynomial) -> Polynomial:
    """Swap z_k and zs_k in every monomial (an involution)."""
    result = Polynomial.zero(p.n_modes)
    result._terms = {m.swapped(): c for m, c in p._terms.items()}
    return result


def hilbert_basis(n_modes: int) -> list[Monomial]:
    """The n generators z_k * zs_k of the flow-invariant subring."""
    if n_modes < 1:
        raise ValueError("n_modes must be >= 1")
    basis = []
    for k in range(n_modes):
        exps = [0] * n_modes
        exps[k] = 1
        basis.append(Monomial(tuple(exps), tuple(exps)))
    return basis


def harmonic_hamiltonian(freqs: Sequence[RationalLike]) -> Polynomial:
    """The quadratic Hamiltonian -i * sum_k w_k z_k zs_k with exact w_k."""
    n = len(freqs)
    terms = []
    for k, w in enumerate(freqs, start=1):
        coeff = EC_MINUS_I * _as_fraction(w, "frequency")
        terms.append((hilbert_basis(n)[k - 1], coeff))
    return Polynomial(n, terms)


def flow_apply(
    z0: Sequence[complex], t: float, freqs: Sequence[float]
) -> tuple[complex, ...]:
    """Advance a phase point along the harmonic flow: z_k -> exp(-i w_k t) z_k."""
    if len(z0) != len(freqs):
        raise ValueError(f"mode-count mismatch: {len(z0)} point vs {len(freqs)} freqs")
    if not isfinite(t):
        raise ValueError("t must be finite")
    return tuple(cmath.exp(-1j * w * t) * complex(z) for w, z in zip(freqs, z0))


def find_resonance(
    freqs: Sequence[float], bound: int, tol: float
) -> tuple[int, ...] | None:
    """Search for an integer relation sum_k lam_k w_k = 0 within tol.

    Exhausts all nonzero integer vectors with max-norm <= bound and returns
    the hit with smallest max-norm, ties broken lexicographically, or None.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    if tol <= 0:
        raise ValueError("tol must be > 0")
    n = len(freqs)
    if n < 1:
        raise ValueError("need at least one frequency")
    candidates = (2 * bound + 1) ** n - 1
    if candidates > RESONANCE_SEARCH_CAP:
        raise ValueError(
            f"resonance search space has {candidates} candidates "
            f"(cap {RESONANCE_SEARCH_CAP}); reduce bound or mode count"
        )
    best: tuple[int, tuple[int, ...]] | None = None
    for lam in product(range(-bound, bound + 1), repeat=n):
        if not any(lam):
            continue
        if abs(sum(l * w for l, w in zip(lam, freqs))) <= tol:
            key = (max(abs(v) for v in lam), lam)
            if best is None or key < best:
                best = key
    return None if best is None else best[1]


def evaluate(p: Polynomial, z: Sequence[complex]) -> complex:
    """Numeric value of the polynomial at a phase point (doubles boundary)."""
    if len(z) != p.n_modes:
        raise ValueError(f"mode-count mismatch: {len(z)} point vs {p.n_modes} modes")
    point = [complex(v) for v in z]
    total = 0j
    for mono, coeff in p._terms.items():
        value = complex(coeff)
        for zk, a, b in zip(point, mono.alpha, mono.beta):
            if a:
                value *= zk**a
            if b:
                value *= zk.conjugate() ** b
        total += value
    return total
