"""HTTP service wrapping the distance engine.

All computation runs server-side; clients submit series text (``bits`` or
``rle`` format, one series per request field) or job parameters.  Errors
come back as a structured envelope so thin clients can map them to exit
codes: ``parse`` (bad series text, with line/column and which input),
``usage`` (bad parameters), ``resource`` (materialization or table caps).
"""

from __future__ import annotations

from typing import Literal, Optional

from fastapi import FastAPI
from fastapi.responses import JSONResponse
from pydantic import BaseModel, Field

from . import __version__ as _version
from . import oracle
from .api import dtw
from .bench import run_bench
from .matching import delta_trace, solve_tree
from .reduction import reduce_pair
from .selfcheck import MAX_EXHAUSTIVE_LEN, run_selftest
from .series import (
    BinarySeries,
    DecodeTooLarge,
    ParseError,
    parse_series_text,
    rle_encode,
)

__all__ = ["app", "create_app"]


class ErrorInfo(BaseModel):
    type: Literal["parse", "usage", "resource"]
    message: str
    input: Optional[Literal["x", "y"]] = None
    line: Optional[int] = None
    column: Optional[int] = None


class ErrorEnvelope(BaseModel):
    error: ErrorInfo


class DistRequest(BaseModel):
    x: str
    y: str
    format: Literal["bits", "rle"] = "bits"
    algo: Literal["auto", "linear", "rle", "dp"] = "auto"
    dump_instances: bool = False
    delta_trace: bool = False


class InstanceDump(BaseModel):
    weights: list[int]
    r: int
    offset: int


class DistResponse(BaseModel):
    value: int
    algorithm: str
    n: int
    m: int
    k: int
    l: int
    elapsed_ns: int
    shortcut: Optional[int] = None
    instances: Optional[list[InstanceDump]] = None
    delta_trace: Optional[list[int]] = None


class SelftestRequest(BaseModel):
    max_len: int = Field(8, ge=1, le=MAX_EXHAUSTIVE_LEN)
    trials: int = Field(10_000, ge=0)
    seed: int = 1


class FailureInfo(BaseModel):
    x: str
    y: str
    linear: int
    rle: int
    dp: int


class SelftestResponse(BaseModel):
    max_len: int
    pairs_checked: int
    random_trials: int
    mismatches: int
    passed: bool
    first_failure: Optional[FailureInfo] = None


class BenchRequest(BaseModel):
    generator: str = "uniform"
    sizes: list[int] = Field(min_length=1)
    trials: int = Field(3, ge=1)
    seed: int = 7
    algos: list[Literal["auto", "linear", "rle", "dp"]] = ["linear"]


class BenchRowModel(BaseModel):
    generator: str
    size: int
    algorithm: str
    median_ns: int
    checksum: int


class BenchResponse(BaseModel):
    seed: int
    trials: int
    rows: list[BenchRowModel]


def _error(status: int, kind: str, message: str, **extra) -> JSONResponse:
    info = ErrorInfo(type=kind, message=message, **extra)
    return JSONResponse(status_code=status, content=ErrorEnvelope(error=info).model_dump())


def _parse_single(text: str, fmt: str, which: str):
    try:
        series = parse_series_text(text, fmt)
    except ParseError as exc:
        raise _ParseFailure(which, exc) from None
    if len(series) != 1:
        raise _UsageFailure(f"input {which} must contain exactly one series, found {len(series)}")
    return series[0]


class _ParseFailure(Exception):
    def __init__(self, which: str, err: ParseError):
        self.which = which
        self.err = err


class _UsageFailure(Exception):
    def __init__(self, message: str):
        self.message = message


def create_app() -> FastAPI:
    app = FastAPI(title="bindtw", version=_version)

    @app.get("/health")
    def health():
        return {"status": "ok", "version": _version}

    @app.post(
        "/v1/dist",
        response_model=DistResponse,
        response_model_exclude_none=True,
        responses={400: {"model": ErrorEnvelope}, 413: {"model": ErrorEnvelope}},
    )
    def dist(req: DistRequest):
        try:
            x = _parse_single(req.x, req.format, "x")
            y = _parse_single(req.y, req.format, "y")
        except _ParseFailure as fail:
            return _error(
                400,
                "parse",
                fail.err.reason,
                input=fail.which,
                line=fail.err.line,
                column=fail.err.column,
            )
        except _UsageFailure as fail:
            return _error(400, "usage", fail.message)
        try:
            result = dtw(x, y, algo=req.algo)
            payload = DistResponse(**result.to_dict())
            if req.dump_instances or req.delta_trace:
                out = reduce_pair(rle_encode_maybe(x), rle_encode_maybe(y))
                if req.dump_instances:
                    payload.shortcut = out.shortcut
                    payload.instances = [
                        InstanceDump(weights=inst.weights_list(), r=inst.r, offset=inst.offset)
                        for inst in out.instances
                    ]
                if req.delta_trace:
                    payload.delta_trace = _winning_trace(out)
        except (DecodeTooLarge, oracle.TooLarge) as exc:
            return _error(413, "resource", str(exc))
        except MemoryError:
            return _error(413, "resource", "out of memory")
        return payload

    @app.post("/v1/selftest", response_model=SelftestResponse)
    def selftest(req: SelftestRequest):
        report = run_selftest(max_len=req.max_len, trials=req.trials, seed=req.seed)
        return SelftestResponse(
            max_len=report.max_len,
            pairs_checked=report.pairs_checked,
            random_trials=report.random_trials,
            mismatches=report.mismatches,
            passed=report.passed,
            first_failure=report.first_failure,
        )

    @app.post(
        "/v1/bench",
        response_model=BenchResponse,
        responses={400: {"model": ErrorEnvelope}, 413: {"model": ErrorEnvelope}},
    )
    def bench(req: BenchRequest):
        try:
            report = run_bench(
                generator=req.generator,
                sizes=req.sizes,
                trials=req.trials,
                seed=req.seed,
                algos=tuple(req.algos),
            )
        except ValueError as exc:
            return _error(400, "usage", str(exc))
        except (DecodeTooLarge, oracle.TooLarge) as exc:
            return _error(413, "resource", str(exc))
        except MemoryError:
            return _error(413, "resource", "out of memory")
        return BenchResponse(
            seed=report.seed,
            trials=report.trials,
            rows=[BenchRowModel(**row.to_dict()) for row in report.rows],
        )

    return app


def rle_encode_maybe(series):
    return rle_encode(series) if isinstance(series, BinarySeries) else series


def _winning_trace(out) -> list[int]:
    if out.shortcut is not None or not out.instances:
        return []
    best = min(out.instances, key=solve_tree)
    return [int(d) for d in delta_trace(best)]


app = create_app()
