"""
Pydantic models for the JSON surface of the command line.

Reports are validated from the dataclasses' to_dict() payloads and wrapped
in an OutputEnvelope, whose field order fixes the key order of the output.
"""

from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field


class DiagramModel(BaseModel):
    """D°(w) with its essential set and picture."""
    w: str = Field(..., description="Permutation in one-line notation")
    cells: List[List[int]] = Field(..., description="Cells (row, column) of D°(w)")
    essential: List[List[int]] = Field(..., description="Essential cells of D°(w)")
    ascii: Optional[str] = Field(None, description="Grid picture")


class SymLowModel(BaseModel):
    """Symmetric and lower triangular variant block."""
    dim_X: int
    dim_Y: int
    sw_upper: int = Field(..., description="|SW(w)| strictly above the diagonal")
    graph_edges: List[List[str]]
    dim_sigma: int
    complexity: int


class MSReportModel(BaseModel):
    """Matrix Schubert report."""
    w: str
    diagram_size: int
    dim_X: int
    free_dimension: int
    dim_Y: int
    graph_edges: List[List[str]] = Field(..., description="Edges a -> b* of G_w")
    dim_sigma: int
    complexity: int
    toric: bool
    toric_by_hooks: bool
    toric_by_patterns: bool
    sym_low: Optional[SymLowModel] = None


class ReflectionModel(BaseModel):
    """Prediction for w * s_M against direct recomputation."""
    w: str
    M: int
    label: str
    case: str
    predicted_toric: bool
    actual_toric: bool
    agrees: bool
    weight_cone_delta: str
    cone_rule_holds: Optional[bool] = None


class GraphModel(BaseModel):
    vertices: List[str]
    edges: List[List[str]]


class AnalyticsModel(BaseModel):
    """Pair bookkeeping for pairs without unexpected zeros."""
    C_v: List[List[int]]
    A_v: List[int]
    P_v: List[List[List[int]]]
    nu: int
    dim_sigma: int
    complexity: int


class KLReportModel(BaseModel):
    """Kazhdan-Lusztig report."""
    v: str
    w: str
    dim_N: int
    unexpected_zeros: List[List[int]]
    graph: GraphModel
    dim_sigma: int
    complexity: int
    toric: bool
    generators: Optional[List[str]] = Field(None, description="Normalized generators of the ideal")
    analytics: Optional[AnalyticsModel] = None


class ChainModel(BaseModel):
    elements: List[str]
    labels: List[List[int]] = Field(..., description="Positions swapped at each step")


class IntervalModel(BaseModel):
    """A Bruhat interval [v, w]."""
    v: str
    w: str
    length: int
    elements: List[str]
    atoms: Optional[List[str]] = None
    chains: Optional[List[ChainModel]] = None
    extension: Optional[Dict[str, Any]] = Field(None, description="Verdict for extending the interval")


class CIModel(BaseModel):
    """A conditional independence statement and its realization."""
    statement: str
    m: int
    A: List[int]
    B: List[int]
    C: List[int]
    w: Optional[str] = Field(None, description="Realizing permutation, None when not realizable")
    complexity: Optional[int] = None
    generators: Optional[List[str]] = None


class QIModelModel(BaseModel):
    """Quasi-independence model on [m] x [n]."""
    m: int
    n: int
    states: List[List[int]]
    row_map: Dict[str, int]
    col_map: Dict[str, int]
    rational_mle: Optional[bool] = None


class TheoremResultModel(BaseModel):
    theorem_id: str
    n_max: int
    checked: int
    passed: bool
    counterexample: Optional[Dict[str, Any]] = None
    seconds: float
    report_path: Optional[str] = None


class OutputEnvelope(BaseModel):
    """Everything the command line prints in JSON mode."""
    command: List[str] = Field(..., description="Subcommand words as given")
    inputs: List[str] = Field(default_factory=list, description="Input permutations or statements")
    format: str = Field(default="json", description="json, ascii or dot")
    payload: Union[Dict[str, Any], List[Any]] = Field(..., description="Report body")
