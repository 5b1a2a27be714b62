"""FastAPI service exposing the library over HTTP.

The service is stateless: molecule models travel in the request (builtin
name or model-file text), so instances can be scaled or restarted freely.
Domain errors (bad grammar, odd orders, oversize searches, model findings)
map to 400 with a human-readable detail; schema violations are FastAPI's
usual 422.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from . import __version__
from .algebra import find_resonance, kernel_test, poisson_bracket, polynomial_to_text
from .checks import run_property_suite
from .counting import CountSpec, additional_operators_by_order, count_closed, enumerate_signatures
from .parsing import parse_polynomial
from .schemas import (
    BracketRequest,
    CheckRequest,
    CheckResponse,
    CheckResultOut,
    CountRequest,
    CountResponse,
    EnergyRequest,
    EnergyResponse,
    FindingOut,
    HealthResponse,
    KernelRequest,
    KernelResponse,
    LevelOut,
    ModelPayload,
    OrderHistogramResponse,
    PolynomialResponse,
    ResonanceRequest,
    ResonanceResponse,
    SignaturesResponse,
    SpectrumRequest,
    SpectrumResponse,
    ValidateRequest,
    ValidateResponse,
)
from .spectrum import (
    MoleculeModel,
    builtin_model,
    enumerate_levels,
    parse_model,
    term_energy,
    validate_model,
)


def resolve_model(payload: ModelPayload) -> MoleculeModel:
    if payload.builtin is not None:
        model = builtin_model(payload.builtin)
    else:
        assert payload.model_text is not None
        model = parse_model(payload.model_text)
    if payload.delta is not None:
        model = model.with_delta(payload.delta)
    return model


def _usable_model(payload: ModelPayload) -> MoleculeModel:
    """Resolve and gate on error findings (warnings pass through)."""
    model = resolve_model(payload)
    errors = [f for f in validate_model(model) if f.severity == "error"]
    if errors:
        raise ValueError("; ".join(f.message for f in errors))
    return model


def create_app() -> FastAPI:
    app = FastAPI(title="vibham", version=__version__)

    @app.exception_handler(ValueError)
    async def value_error_handler(_: Request, exc: ValueError) -> JSONResponse:
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/count", response_model=CountResponse)
    def count(req: CountRequest) -> CountResponse:
        return CountResponse(count=count_closed(CountSpec(req.modes, req.order)))

    @app.post("/signatures", response_model=SignaturesResponse)
    def signatures(req: CountRequest) -> SignaturesResponse:
        sigs = enumerate_signatures(CountSpec(req.modes, req.order))
        return SignaturesResponse(signatures=[list(s) for s in sigs])

    @app.post("/operators-by-order", response_model=OrderHistogramResponse)
    def operators_by_order(req: CountRequest) -> OrderHistogramResponse:
        return OrderHistogramResponse(
            by_order=additional_operators_by_order(req.modes, req.order)
        )

    @app.post("/bracket", response_model=PolynomialResponse)
    def bracket(req: BracketRequest) -> PolynomialResponse:
        p = parse_polynomial(req.p, req.modes)
        q = parse_polynomial(req.q, req.modes)
        return PolynomialResponse(result=polynomial_to_text(poisson_bracket(p, q)))

    @app.post("/kernel", response_model=KernelResponse)
    def kernel(req: KernelRequest) -> KernelResponse:
        poly = parse_polynomial(req.monomial, req.modes)
        terms = poly.sorted_terms()
        if len(terms) != 1 or terms[0][1].re != 1 or terms[0][1].im != 0:
            raise ValueError("kernel test expects a single monomial with coefficient 1")
        mono = terms[0][0]
        return KernelResponse(
            in_kernel=kernel_test(mono, req.omega, req.tol),
            weight=list(mono.weight()),
        )

    @app.post("/resonance", response_model=ResonanceResponse)
    def resonance(req: ResonanceRequest) -> ResonanceResponse:
        hit = find_resonance(req.omega, req.bound, req.tol)
        return ResonanceResponse(found=hit is not None, vector=None if hit is None else list(hit))

    @app.post("/energy", response_model=EnergyResponse)
    def energy(req: EnergyRequest) -> EnergyResponse:
        model = _usable_model(req.model)
        return EnergyResponse(energy=term_energy(model, tuple(req.state)))

    @app.post("/spectrum", response_model=SpectrumResponse)
    def spectrum(req: SpectrumRequest) -> SpectrumResponse:
        model = _usable_model(req.model)
        levels = enumerate_levels(model, req.cutoff, req.box)
        return SpectrumResponse(
            modes=model.n_modes,
            count=len(levels),
            max_energy=levels[-1].energy if levels else None,
            levels=[LevelOut(state=list(lv.state), energy=lv.energy) for lv in levels],
        )

    @app.post("/model/validate", response_model=ValidateResponse)
    def model_validate(req: ValidateRequest) -> ValidateResponse:
        findings = validate_model(resolve_model(req.model))
        return ValidateResponse(
            clean=not findings,
            findings=[FindingOut(severity=f.severity, message=f.message) for f in findings],
        )

    @app.post("/check", response_model=CheckResponse)
    def check(req: CheckRequest) -> CheckResponse:
        results = run_property_suite(req.modes, req.order, req.seed, req.samples)
        return CheckResponse(
            all_passed=all(r.passed for r in results),
            results=[
                CheckResultOut(name=r.name, passed=r.passed, detail=r.detail)
                for r in results
            ],
        )

    return app


app = create_app()
