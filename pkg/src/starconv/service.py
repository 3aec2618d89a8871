"""HTTP service wrapping the engine, and the handler functions it shares
with the command-line client.

Run with: uvicorn starconv.service:app
"""

from __future__ import annotations

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .carriers import Carrier
from .convolution import ConvMode, convolve, is_convex, is_monoid
from .errors import StarconvError, UnknownFixtureError
from .gallery import FIXTURE_NAMES, resolve_fixture
from .schemas import (
    CheckRequest,
    CheckResponse,
    ConvolveRequest,
    ConvolveResponse,
    MonoidRequest,
    MonoidResponse,
    StructureDoc,
    functor_from_doc,
    functor_to_doc,
    law_report,
    structure_from_doc,
    structure_to_doc,
    witness_model,
)
from .structures import (
    PromonoidalStructure,
    check_associativity,
    check_cyclic,
    check_dual_compat,
    check_unit,
    check_variance,
)

def resolve_structure(spec: str | StructureDoc, carrier: str | None = None) -> PromonoidalStructure:
    """A fixture name or an inline structure document."""
    if isinstance(spec, str):
        return resolve_fixture(spec, Carrier(carrier) if carrier else None)
    if carrier is not None and carrier != spec.carrier:
        raise StarconvError("carrier overrides apply to fixture names, not documents")
    return structure_from_doc(spec)


def standard_reports(structure: PromonoidalStructure, tol: float):
    """The check suite for one structure.

    Unit is skipped without a j table and cyclic without a duality map.
    Dual-compatibility is an axiom of fusion-style data, so it runs only on
    NAT structures carrying a duality map; indicator tables over the real
    carriers do not claim it.
    """
    reports: list[tuple[str, object]] = [
        ("variance", check_variance(structure, tol=tol)),
        ("associativity", check_associativity(structure, tol)),
        ("unit", check_unit(structure, tol) if structure.j is not None else None),
        ("cyclic", check_cyclic(structure, tol) if structure.s is not None else None),
        (
            "dual_compat",
            check_dual_compat(structure, tol)
            if structure.s is not None and structure.carrier is Carrier.NAT
            else None,
        ),
    ]
    return reports


def run_check(request: CheckRequest) -> CheckResponse:
    structure = resolve_structure(request.structure, request.carrier)
    reports = standard_reports(structure, request.tol)
    models = [law_report(law, rep, structure.carrier) for law, rep in reports]
    ok = all(model.status != "fail" for model in models)
    return CheckResponse(ok=ok, reports=models)


def run_convolve(request: ConvolveRequest) -> ConvolveResponse:
    structure = resolve_structure(request.structure, request.carrier)
    f = functor_from_doc(request.f, structure)
    g = functor_from_doc(request.g, structure)
    result = convolve(f, g, structure, ConvMode(request.mode))
    return ConvolveResponse(values=functor_to_doc(result))


def run_monoid(request: MonoidRequest) -> MonoidResponse:
    structure = resolve_structure(request.structure, request.carrier)
    f = functor_from_doc(request.f, structure)
    if request.mode == "convex":
        verdict = is_convex(f, structure, request.tol)
    else:
        verdict = is_monoid(f, structure, ConvMode(request.mode), request.tol)
    witness = (
        witness_model(verdict.witness, structure.carrier)
        if verdict.witness is not None
        else None
    )
    return MonoidResponse(holds=verdict.holds, witness=witness)


def gallery_doc(name: str, carrier: str | None = None) -> StructureDoc:
    return structure_to_doc(resolve_fixture(name, Carrier(carrier) if carrier else None))


def create_app() -> FastAPI:
    app = FastAPI(
        title="starconv",
        description="Convolutions and axiom checks for finite promonoidal structures",
        version="0.1.0",
    )

    @app.exception_handler(UnknownFixtureError)
    async def unknown_fixture(_, exc: UnknownFixtureError):
        return JSONResponse(status_code=404, content={"detail": str(exc)})

    @app.exception_handler(StarconvError)
    async def domain_error(_, exc: StarconvError):
        return JSONResponse(status_code=400, content={"detail": str(exc)})

    @app.get("/health")
    def health():
        return {"status": "ok"}

    @app.get("/fixtures")
    def fixtures() -> list[str]:
        return list(FIXTURE_NAMES)

    @app.get("/gallery/{name}", response_model=StructureDoc, response_model_exclude_none=True)
    def gallery(name: str, carrier: str | None = None):
        return gallery_doc(name, carrier)

    @app.post("/check", response_model=CheckResponse)
    def check(request: CheckRequest):
        return run_check(request)

    @app.post("/convolve", response_model=ConvolveResponse)
    def convolve_route(request: ConvolveRequest):
        return run_convolve(request)

    @app.post("/monoid", response_model=MonoidResponse)
    def monoid(request: MonoidRequest):
        return run_monoid(request)

    return app


app = create_app()
