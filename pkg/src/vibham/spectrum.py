"""Vibrational term energies from a number-operator polynomial expansion.

A molecule model holds harmonic frequencies and the anharmonic expansion
coefficients keyed by generator power vector.  Quantizing the classical
generators as number operators turns the normalized Hamiltonian into a
polynomial in the quantum numbers, so a term energy is a direct polynomial
evaluation:

    E(n) = sum_k w_k nt_k + sum_sig a_sig prod_k nt_k^{r_k},   nt = n + delta

Energies are always returned relative to the ground state, so the zero
state maps to exactly 0 under either quantum-number convention (delta = 0
or 1/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from itertools import product
from typing import Iterable, NamedTuple, Sequence

from .algebra import find_resonance
from .counting import MonomialSignature, signature_degree

FockState = tuple[int, ...]

#: Refuse level enumerations whose search box exceeds this many states.
LEVEL_SEARCH_CAP = 10**7

#: Bound and tolerance (cm^-1) used by the informational resonance scan.
RESONANCE_SCAN_BOUND = 5
RESONANCE_SCAN_TOL = 1.0


class EnergyLevel(NamedTuple):
    state: FockState
    energy: float


class Finding(NamedTuple):
    severity: str  # "error" | "warning"
    message: str


class ModelFormatError(ValueError):
    """Malformed molecule model text; message carries the line number."""


def _canonical_coefficients(
    coefficients: dict[MonomialSignature, float],
) -> dict[MonomialSignature, float]:
    return {
        sig: coefficients[sig]
        for sig in sorted(coefficients, key=lambda s: (sum(s), s))
    }


@dataclass(frozen=True)
class MoleculeModel:
    """Frequencies plus anharmonic expansion coefficients, all in cm^-1."""

    name: str
    n_modes: int
    omega: tuple[float, ...]
    coefficients: dict[MonomialSignature, float]
    order: int
    delta: float = 0.0
    reference_energy: float = 0.0

    def __post_init__(self) -> None:
        object.__setattr__(self, "omega", tuple(float(w) for w in self.omega))
        if len(self.omega) != self.n_modes:
            raise ValueError(
                f"{len(self.omega)} frequencies for {self.n_modes} modes"
            )
        coeffs = {tuple(sig): float(v) for sig, v in self.coefficients.items()}
        for sig in coeffs:
            if len(sig) != self.n_modes:
                raise ValueError(f"signature {sig} does not have {self.n_modes} entries")
            if any(not isinstance(r, int) or r < 0 for r in sig):
                raise ValueError(f"signature {sig} must hold non-negative integers")
        object.__setattr__(self, "coefficients", _canonical_coefficients(coeffs))
        if self.delta not in (0.0, 0.5):
            raise ValueError("delta must be 0 or 0.5")

    def with_delta(self, delta: float) -> "MoleculeModel":
        return replace(self, delta=float(delta))


def validate_model(model: MoleculeModel) -> list[Finding]:
    """Check model invariants; an empty list means clean.

    Structural problems come back as "error" findings; a near-resonance of
    the frequencies (integer relation within RESONANCE_SCAN_TOL up to
    max-norm RESONANCE_SCAN_BOUND) is only a "warning", since the expansion
    stays evaluable.
    """
    findings: list[Finding] = []
    if any(w <= 0 for w in model.omega):
        findings.append(Finding("error", "frequencies must be strictly positive"))
    if len(set(model.omega)) != model.n_modes:
        findings.append(Finding("error", "frequencies not pairwise distinct"))
    if model.order < 2 or model.order % 2 != 0:
        findings.append(Finding("error", f"order must be even and >= 2, got {model.order}"))
    for sig in model.coefficients:
        if sum(sig) < 2:
            findings.append(
                Finding("error", f"signature {sig} has total power < 2 (belongs in omega)")
            )
        if signature_degree(sig) > model.order:
            findings.append(
                Finding(
                    "error",
                    f"signature {sig} of degree {signature_degree(sig)} "
                    f"exceeds order {model.order}",
                )
            )
    for value in model.coefficients.values():
        if not math.isfinite(value):
            findings.append(Finding("error", "coefficients must be finite"))
            break
    if not findings and all(w > 0 for w in model.omega):
        hit = find_resonance(model.omega, RESONANCE_SCAN_BOUND, RESONANCE_SCAN_TOL)
        if hit is not None:
            findings.append(
                Finding(
                    "warning",
                    f"frequencies admit a near-resonance {hit} within "
                    f"{RESONANCE_SCAN_TOL} cm^-1",
                )
            )
    return findings


def _raw_energy(model: MoleculeModel, shifted: Sequence[float]) -> float:
    energy = sum(w * v for w, v in zip(model.omega, shifted))
    for sig, coeff in model.coefficients.items():
        term = coeff
        for v, r in zip(shifted, sig):
            if r:
                term *= v**r
        energy += term
    return energy


def term_energy(model: MoleculeModel, state: Sequence[int]) -> float:
    """Term energy of a quantum state, relative to the ground state."""
    if len(state) != model.n_modes:
        raise ValueError(
            f"state has {len(state)} entries for a {model.n_modes}-mode model"
        )
    if any(not isinstance(q, int) or q < 0 for q in state):
        raise ValueError("quantum numbers must be non-negative integers")
    shifted = tuple(q + model.delta for q in state)
    base = (model.delta,) * model.n_modes
    return _raw_energy(model, shifted) - _raw_energy(model, base)


def default_search_box(model: MoleculeModel, cutoff: float) -> tuple[int, ...]:
    """Heuristic per-mode quantum-number bounds: ceil(cutoff / w_k) + 2."""
    return tuple(math.ceil(cutoff / w) + 2 for w in model.omega)


def enumerate_levels(
    model: MoleculeModel,
    cutoff: float,
    box: Sequence[int] | None = None,
) -> list[EnergyLevel]:
    """All states in the search box with 0 <= energy <= cutoff, ascending.

    The default box is a heuristic (the expansion is not monotone in the
    quantum numbers); pass an explicit ``box`` of per-mode maxima to widen
    it.  Ties in energy are broken by lexicographic order on the state.

    Raises:
        ValueError: negative cutoff, malformed box, or a search box larger
            than LEVEL_SEARCH_CAP states.
    """
    if cutoff < 0:
        raise ValueError("cutoff must be >= 0")
    if box is None:
        bounds = default_search_box(model, cutoff)
    else:
        bounds = tuple(int(b) for b in box)
        if len(bounds) != model.n_modes:
            raise ValueError(f"box needs {model.n_modes} entries, got {len(bounds)}")
        if any(b < 0 for b in bounds):
            raise ValueError("box entries must be >= 0")
    states = math.prod(b + 1 for b in bounds)
    if states > LEVEL_SEARCH_CAP:
        raise ValueError(
            f"search box holds {states} states (cap {LEVEL_SEARCH_CAP}); "
            "supply explicit per-mode bounds via box="
        )
    levels = [
        EnergyLevel(state, energy)
        for state in product(*(range(b + 1) for b in bounds))
        if 0.0 <= (energy := term_energy(model, state)) <= cutoff
    ]
    levels.sort(key=lambda lv: (lv.energy, lv.state))
    return levels


def levels_to_csv(levels: Iterable[EnergyLevel], n_modes: int) -> str:
    """CSV text with header n1,..,nn,energy_cm1 and 4-decimal energies."""
    lines = [",".join(f"n{k + 1}" for k in range(n_modes)) + ",energy_cm1"]
    for state, energy in levels:
        lines.append(",".join(str(q) for q in state) + f",{energy:.4f}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# built-in ClOH model
# ---------------------------------------------------------------------------

_CLOH_OMEGA = (739.685, 1245.09, 3748.47)

# Anharmonic expansion coefficients in cm^-1, keyed by generator powers
# (r1, r2, r3) for the Cl-O stretch / bend / O-H stretch local modes.  The
# two zero entries are genuine published values and are kept so the operator
# ledger per order stays 6 + 10 + 15.
_CLOH_COEFFICIENTS: dict[MonomialSignature, float] = {
    # order 4
    (2, 0, 0): -3.517,
    (0, 2, 0): 2.181,
    (0, 0, 2): -84.540,
    (1, 1, 0): -7.049,
    (1, 0, 1): -0.490,
    (0, 1, 1): -16.291,
    # order 6
    (3, 0, 0): -0.259,
    (0, 3, 0): -0.778,
    (0, 0, 3): -0.173,
    (1, 2, 0): -0.131,
    (1, 0, 2): -0.122,
    (0, 1, 2): -3.965,
    (2, 1, 0): -0.428,
    (2, 0, 1): -0.508,
    (0, 2, 1): -0.154,
    (1, 1, 1): -0.767,
    # order 8
    (4, 0, 0): 0.0098,
    (0, 4, 0): 0.0111,
    (0, 0, 4): 0.0153,
    (3, 1, 0): 0.0,
    (3, 0, 1): 0.0,
    (0, 3, 1): 0.0793,
    (2, 2, 0): -0.0079,
    (2, 0, 2): -0.0174,
    (0, 2, 2): -0.0426,
    (1, 3, 0): 0.0021,
    (1, 0, 3): -0.0007,
    (0, 1, 3): 0.2885,
    (1, 1, 2): 0.1553,
    (1, 2, 1): 0.1003,
    (2, 1, 1): 0.0854,
}


def builtin_cloh() -> MoleculeModel:
    """The ClOH spectroscopic model: order-8 expansion, 34 operators total.

    The ground state sits 2867.0 cm^-1 above the potential minimum
    (recorded as reference_energy; all returned energies stay relative to
    the ground state).
    """
    return MoleculeModel(
        name="ClOH",
        n_modes=3,
        omega=_CLOH_OMEGA,
        coefficients=dict(_CLOH_COEFFICIENTS),
        order=8,
        delta=0.0,
        reference_energy=2867.0,
    )


BUILTIN_MODELS = {"cloh": builtin_cloh}


def builtin_model(name: str) -> MoleculeModel:
    try:
        factory = BUILTIN_MODELS[name.lower()]
    except KeyError:
        known = ", ".join(sorted(BUILTIN_MODELS))
        raise ValueError(f"unknown builtin model {name!r} (available: {known})") from None
    return factory()


# ---------------------------------------------------------------------------
# model file format
# ---------------------------------------------------------------------------


def parse_model(text: str) -> MoleculeModel:
    """Parse the line-oriented molecule model format.

    Keys: name, modes, order, delta, reference, omega <k> <value>,
    coef <r1> .. <rn> <value>.  Lines starting with '#' are comments.
    Unknown keys and malformed lines raise ModelFormatError with the line
    number.
    """
    name: str | None = None
    n_modes: int | None = None
    order: int | None = None
    delta: float | None = None
    reference: float | None = None
    omega: dict[int, float] = {}
    coefficients: dict[MonomialSignature, float] = {}

    def fail(lineno: int, message: str) -> ModelFormatError:
        return ModelFormatError(f"line {lineno}: {message}")

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        key = fields[0]
        try:
            if key == "name":
                name = " ".join(fields[1:])
                if not name:
                    raise ValueError("empty name")
            elif key == "modes":
                (value,) = fields[1:]
                n_modes = int(value)
            elif key == "order":
                (value,) = fields[1:]
                order = int(value)
            elif key == "delta":
                (value,) = fields[1:]
                delta = float(value)
            elif key == "reference":
                (value,) = fields[1:]
                reference = float(value)
            elif key == "omega":
                mode_text, value = fields[1:]
                mode = int(mode_text)
                if n_modes is None:
                    raise ValueError("'modes' must appear before omega lines")
                if not 1 <= mode <= n_modes:
                    raise ValueError(f"mode index {mode} out of range 1..{n_modes}")
                if mode in omega:
                    raise ValueError(f"duplicate omega entry for mode {mode}")
                omega[mode] = float(value)
            elif key == "coef":
                if n_modes is None:
                    raise ValueError("'modes' must appear before coef lines")
                if len(fields) != n_modes + 2:
                    raise ValueError(
                        f"coef needs {n_modes} powers and a value, got {len(fields) - 1} fields"
                    )
                sig = tuple(int(r) for r in fields[1 : 1 + n_modes])
                if sig in coefficients:
                    raise ValueError(f"duplicate coefficient for signature {sig}")
                coefficients[sig] = float(fields[-1])
            else:
                raise ValueError(f"unknown key {key!r}")
        except ModelFormatError:
            raise
        except ValueError as exc:
            raise fail(lineno, str(exc)) from None

    missing = [
        label
        for label, value in [
            ("name", name),
            ("modes", n_modes),
            ("order", order),
            ("delta", delta),
            ("reference", reference),
        ]
        if value is None
    ]
    if missing:
        raise ModelFormatError(f"missing required keys: {', '.join(missing)}")
    assert n_modes is not None and name is not None
    assert order is not None and delta is not None and reference is not None
    absent = [k for k in range(1, n_modes + 1) if k not in omega]
    if absent:
        raise ModelFormatError(f"missing omega entries for modes {absent}")
    return MoleculeModel(
        name=name,
        n_modes=n_modes,
        omega=tuple(omega[k] for k in range(1, n_modes + 1)),
        coefficients=coefficients,
        order=order,
        delta=delta,
        reference_energy=reference,
    )


def _format_float(value: float) -> str:
    # repr round-trips exactly, which keeps write->parse field-exact
    if value == int(value) and abs(value) < 1e15:
        return str(int(value))
    return repr(value)


def render_model(model: MoleculeModel) -> str:
    """Serialize a model; signatures are written in graded-lex order."""
    lines = [
        f"name {model.name}",
        f"modes {model.n_modes}",
        f"order {model.order}",
        f"delta {_format_float(model.delta)}",
        f"reference {_format_float(model.reference_energy)}",
    ]
    for k, w in enumerate(model.omega, start=1):
        lines.append(f"omega {k} {_format_float(w)}")
    for sig, value in model.coefficients.items():  # already graded-lex
        powers = " ".join(str(r) for r in sig)
        lines.append(f"coef {powers} {_format_float(value)}")
    return "\n".join(lines) + "\n"


def load_model(path: str) -> MoleculeModel:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_model(handle.read())


def save_model(model: MoleculeModel, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(render_model(model))
