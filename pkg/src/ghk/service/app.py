"""HTTP service wrapping the toolkit.

Each endpoint is a thin adapter over :mod:`ghk.runner`, so responses carry the
same envelopes as the CLI.  Run locally with

    uvicorn ghk.service.app:app
"""
from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import runner
from . import models

app = FastAPI(
    title="ghk",
    description="Exact bounds, constructions, and oracles for Gorenstein h-vectors.",
    version="0.1.0",
)


@app.exception_handler(ValueError)
async def precondition_error(request: Request, exc: ValueError) -> JSONResponse:
    return JSONResponse(status_code=422, content={"detail": str(exc)})


@app.get("/healthz")
def healthz() -> dict:
    return {"status": "ok"}


@app.post("/v1/expand", response_model=models.CommandResponse)
def expand(req: models.ExpandRequest):
    return runner.run_expand(req.n, req.base).to_dict()


@app.post("/v1/shift", response_model=models.CommandResponse)
def shift(req: models.ShiftRequest):
    return runner.run_shift(req.n, req.base, req.a, req.b).to_dict()


@app.post("/v1/growth", response_model=models.CommandResponse)
def growth(req: models.GrowthRequest):
    return runner.run_growth(req.n, req.deg).to_dict()


@app.post("/v1/green", response_model=models.CommandResponse)
def green(req: models.GrowthRequest):
    return runner.run_green(req.n, req.deg).to_dict()


@app.post("/v1/bg-min", response_model=models.CommandResponse)
def bg_min(req: models.BgMinRequest):
    return runner.run_bg_min(req.a, req.deg).to_dict()


@app.post("/v1/bound", response_model=models.CommandResponse)
def bound(req: models.BoundRequest):
    return runner.run_bound(req.h, req.e, req.i).to_dict()


@app.post("/v1/envelope", response_model=models.CommandResponse)
def envelope(req: models.EnvelopeRequest):
    return runner.run_envelope(req.r, req.e).to_dict()


@app.post("/v1/mid", response_model=models.CommandResponse)
def mid(req: models.MidRequest):
    return runner.run_mid(req.r, req.e).to_dict()


@app.post("/v1/threshold", response_model=models.CommandResponse)
def threshold(req: models.ThresholdRequest):
    return runner.run_threshold(req.e, req.i).to_dict()


@app.post("/v1/e0", response_model=models.CommandResponse)
def e0(req: models.E0Request):
    return runner.run_e0(req.r, req.i).to_dict()


@app.post("/v1/codim3-cert", response_model=models.CommandResponse)
def codim3_cert(req: models.EmaxRequest):
    return runner.run_codim3_cert(req.emax).to_dict()


@app.post("/v1/decompose", response_model=models.CommandResponse)
def decompose(req: models.DecomposeRequest):
    return runner.run_decompose(req.r, req.e).to_dict()


@app.post("/v1/construct", response_model=models.CommandResponse)
def construct(req: models.ConstructRequest):
    return runner.run_construct(req.r, req.e).to_dict()


@app.post("/v1/check-oseq", response_model=models.CommandResponse)
def check_oseq(req: models.HVectorRequest):
    return runner.run_check_oseq(req.h).to_dict()


@app.post("/v1/check-si", response_model=models.CommandResponse)
def check_si(req: models.HVectorRequest):
    return runner.run_check_si(req.h).to_dict()


@app.post("/v1/lex-growth", response_model=models.CommandResponse)
def lex_growth(req: models.LexGrowthRequest):
    return runner.run_lex_growth(req.h, req.deg, req.vars).to_dict()


@app.post("/v1/lex-level", response_model=models.CommandResponse)
def lex_level(req: models.LexLevelRequest):
    return runner.run_lex_level(req.h, req.vars).to_dict()


@app.post("/v1/catalecticant", response_model=models.CommandResponse)
def catalecticant(req: models.CatalecticantRequest):
    return runner.run_catalecticant(req.form.to_json_dict(), req.prime).to_dict()


@app.post("/v1/compressed", response_model=models.CommandResponse)
def compressed(req: models.CompressedRequest):
    return runner.run_compressed(req.r, req.e).to_dict()


@app.post("/v1/limit", response_model=models.CommandResponse)
def limit(req: models.LimitRequest):
    return runner.run_limit(req.e, req.i).to_dict()


@app.post("/v1/table", response_model=models.CommandResponse)
def table(req: models.TableRequest):
    return runner.run_table(req.e, req.i, req.rmax, req.per_decade, jobs=req.jobs).to_dict()


@app.post("/v1/kleinschmidt", response_model=models.CommandResponse)
def kleinschmidt(req: models.EmaxRequest):
    return runner.run_kleinschmidt(req.emax).to_dict()
