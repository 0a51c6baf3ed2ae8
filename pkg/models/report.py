from typing import Dict, List, Optional

from pydantic import BaseModel, Field

from config.settings import SCHEMA_VERSION

Amplitude = List[float]  # [re, im]


class SubgroupSummary(BaseModel):
    n_qubits: int
    generators: List[str]
    elements: List[str]
    order: int
    rank: int
    is_abelian: bool
    phase_class: str
    contains_minus_identity: bool


class VerificationSummary(BaseModel):
    trials: int
    seed: int
    tolerance: float
    max_residual: float
    failures: int
    passed: bool


class CharacterEntry(BaseModel):
    label: int
    values: Dict[str, str]
    supported: bool
    multiplicity: int
    formula: int
    basis: List[List[Amplitude]] = Field(default_factory=list)
    verification: Optional[VerificationSummary] = None


class NonAbelianSummary(BaseModel):
    one_dim_spaces: int
    total_dimension: int
    reducibility_sum: float
    verdict: str


class ChannelCheck(BaseModel):
    parameters: List[Amplitude]
    normalization_residual: float
    code_residual: float
    passed: bool


class ProbeSummary(BaseModel):
    seed: int
    draws: int
    threshold: float
    unconstrained_failures: int
    constrained_failures: int


class Q8Summary(BaseModel):
    subspaces: List[List[str]]
    invariance_residuals: List[float]
    code_states: List[str]
    gamma: Dict[str, List[List[Amplitude]]]
    constrained_channel: ChannelCheck
    probe: ProbeSummary


class AnalysisReport(BaseModel):
    schema_version: int = SCHEMA_VERSION
    command: str
    preset: Optional[str] = None
    subgroup: SubgroupSummary
    characters: List[CharacterEntry] = Field(default_factory=list)
    dimension_agrees: Optional[bool] = None
    all_verified: Optional[bool] = None
    nonabelian: Optional[NonAbelianSummary] = None
    q8: Optional[Q8Summary] = None
    timing: Optional[Dict[str, float]] = None


class ScanTrialEntry(BaseModel):
    index: int
    purity: float
    fidelity: float
    trace_error: float


class ScanResult(BaseModel):
    schema_version: int = SCHEMA_VERSION
    command: str = "channel"
    subgroup: SubgroupSummary
    state: List[Amplitude]
    renormalized: bool
    seed: int
    n_ops: int
    min_purity: float
    mean_purity: float
    min_fidelity: float
    mean_fidelity: float
    max_trace_error: float
    stays_pure: bool
    trials: List[ScanTrialEntry]
    timing: Optional[Dict[str, float]] = None


class SweepCaseEntry(BaseModel):
    n_qubits: int
    order: int
    phase_class: str
    formula: int
    multiplicities: List[int]
    agrees: bool


class SweepResult(BaseModel):
    schema_version: int = SCHEMA_VERSION
    command: str = "sweep"
    seed: int
    cases: List[SweepCaseEntry]
    passed: bool
    timing: Optional[Dict[str, float]] = None


class DimensionRequest(BaseModel):
    n_qubits: int
    order: int
    phase_class: str = "no_phase_factors"


class DimensionResult(BaseModel):
    schema_version: int = SCHEMA_VERSION
    n_qubits: int
    order: int
    phase_class: str
    multiplicity: int


class AnalyzeRequest(BaseModel):
    generators: List[str]
    dense_limit: Optional[int] = None
    trials: Optional[int] = None
    seed: Optional[int] = None
    require_dfs: bool = False


class ChannelRequest(BaseModel):
    generators: List[str] = Field(default_factory=list)
    state: Optional[str] = None
    preset: Optional[str] = None
    trials: Optional[int] = None
    seed: Optional[int] = None
    n_ops: int = 4
