"""HTTP front end: the analyzers behind a small JSON API.

All computation lives in :mod:`braidpos.report`; this module only maps
requests to report builders and errors to status codes (422 for bad
input or contradictory assertions, 500 for internal-consistency bugs).

Run with ``braidpos serve`` or ``uvicorn braidpos.service:app``.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, ConfigDict, Field

from . import __version__
from .errors import ContradictionError, DomainError, InternalConsistencyError, ParseError
from .report import ReportOptions, braid_report, expression_report, selftest_report


class TbEntry(BaseModel):
    """One row of a TB table: the maximal Thurston-Bennequin number of a
    named knot, with a source note."""

    name: str
    tb: int
    note: str = ""


class BraidRequest(BaseModel):
    word: str = Field(description='braid text, e.g. "s1^3 @2"')
    enable_conjectural: bool = False
    tb_table: list[TbEntry] = Field(default_factory=list)


class ExpressionRequest(BaseModel):
    expression: str = Field(description='knot expression, e.g. "twist(1)"')
    enable_conjectural: bool = False
    tb_table: list[TbEntry] = Field(default_factory=list)


class CertificateOut(BaseModel):
    rule: str
    conclusion: str
    conjectural: bool = False
    premises: list["CertificateOut | str"] = Field(default_factory=list)


CertificateOut.model_rebuild()


class VerdictOut(BaseModel):
    positive_braid: str
    positive: str
    sqp: str
    qp: str
    not_qp: str
    tau: int | None = None
    genus: int | None = None
    g4: int | None = None
    certificates: list[CertificateOut] = Field(default_factory=list)


class WordOut(BaseModel):
    strands: int
    letters: list[int]
    canonical: str


class LegendrianOut(BaseModel):
    tb: int
    rot_abs: int
    left_cusps: int
    bennequin_sum: int
    slice_genus_lower_bound: int
    tau_lower_bound: int


class BraidReportOut(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(alias="schema")
    kind: str
    input: str
    word: WordOut
    components: int
    writhe: int
    is_knot: bool
    legendrian: LegendrianOut | None = None
    alexander: list[list[int]] | None = None
    alexander_str: str | None = None
    signature: int | None = None
    determinant: int | None = None
    fox_milnor_necessary: bool | None = None
    verdict: VerdictOut | None = None
    warnings: list[str] = Field(default_factory=list)


class ExpressionReportOut(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(alias="schema")
    kind: str
    input: str
    expression: str
    verdict: VerdictOut
    warnings: list[str] = Field(default_factory=list)
    braid: BraidReportOut | None = None


class CheckOut(BaseModel):
    name: str
    passed: bool
    detail: str


class SelftestOut(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(alias="schema")
    kind: str
    passed: bool
    checks: list[CheckOut]


def _options(enable_conjectural: bool, tb_table: list[TbEntry]) -> ReportOptions:
    table = None
    if tb_table:
        table = {entry.name: (entry.tb, entry.note) for entry in tb_table}
    return ReportOptions(enable_conjectural=enable_conjectural, tb_table=table)


def _guarded(builder, *args):
    try:
        return builder(*args)
    except (ParseError, DomainError, ContradictionError) as exc:
        detail: dict = {"message": str(exc)}
        if isinstance(exc, ParseError) and exc.position is not None:
            detail["position"] = exc.position
        raise HTTPException(status_code=422, detail=detail) from exc
    except InternalConsistencyError as exc:
        raise HTTPException(status_code=500, detail={"message": str(exc)}) from exc


def create_app() -> FastAPI:
    app = FastAPI(
        title="braidpos",
        description="Exact braid-closure invariants and certificate-backed "
        "positivity verdicts.",
        version=__version__,
    )

    @app.get("/healthz")
    def healthz() -> dict:
        return {"status": "ok", "version": __version__}

    @app.post("/braid", response_model=BraidReportOut)
    def analyze_braid(request: BraidRequest):
        options = _options(request.enable_conjectural, request.tb_table)
        return _guarded(braid_report, request.word, options)

    @app.post("/analyze", response_model=ExpressionReportOut)
    def analyze_expression(request: ExpressionRequest):
        options = _options(request.enable_conjectural, request.tb_table)
        return _guarded(expression_report, request.expression, options)

    @app.get("/selftest", response_model=SelftestOut)
    def selftest():
        return _guarded(selftest_report)

    return app


app = create_app()
