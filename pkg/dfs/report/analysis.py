"""Command orchestration shared by the CLI and the HTTP routers.

Each ``cmd_*`` function returns a pydantic report; rendering to JSON or text
happens at the edges.
"""

import functools
import logging
import time
from contextlib import contextmanager
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

from config import settings
from dfs.channel.kraus import normalization_residual
from dfs.channel.nongeneric import (
    CODE_STATES,
    Q8_SUBSPACES,
    code_residual,
    genericity_probe,
    q8_representation,
    random_triangular_parameters,
    triangular_kraus,
)
from dfs.channel.scan import ScanReport, decoherence_scan
from dfs.decomposition.basis import iter_components
from dfs.decomposition.dimension import dimension_formula, sweep
from dfs.decomposition.eigenspace import nonabelian_one_dim_search
from dfs.decomposition.projector import multiplicity
from dfs.decomposition.verify import verify_dfs
from dfs.errors import AnalysisRefusedError, QubitCountError
from dfs.pauli.element import check_dense, format_pauli, monomial_action
from dfs.report.presets import get_preset, preset_subgroup
from dfs.report.statespec import parse_state
from dfs.subgroup.characters import reducibility_sum
from dfs.subgroup.closure import PauliSubgroup, PhaseClass, subgroup_from_strings
from models.report import (
    AnalysisReport,
    CharacterEntry,
    ChannelCheck,
    DimensionResult,
    NonAbelianSummary,
    ProbeSummary,
    Q8Summary,
    ScanResult,
    ScanTrialEntry,
    SubgroupSummary,
    SweepCaseEntry,
    SweepResult,
    VerificationSummary,
)

logger = logging.getLogger("dfs.report")

_PHASES = {0: "+1", 1: "+i", 2: "-1", 3: "-i"}


def releases_action_cache(func):
    """Drop the cached Pauli permutation tables once a command finishes."""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        finally:
            monomial_action.cache_clear()

    return wrapper


class Stopwatch:
    """Per-stage wall time, summed over repeated entries; recorded only when enabled."""

    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.stages: Dict[str, float] = {}

    @contextmanager
    def stage(self, name: str):
        start = time.perf_counter()
        try:
            yield
        finally:
            if self.enabled:
                self.stages[name] = round(self.stages.get(name, 0.0) + time.perf_counter() - start, 6)

    @property
    def result(self) -> Optional[Dict[str, float]]:
        return self.stages if self.enabled else None


def amplitudes(vector: Iterable[complex]) -> List[List[float]]:
    return [[float(a.real), float(a.imag)] for a in vector]


def _ket(index: int, n_qubits: int) -> str:
    return f"|{index:0{n_qubits}b}>"


def summarize_subgroup(group: PauliSubgroup) -> SubgroupSummary:
    return SubgroupSummary(
        n_qubits=group.n_qubits,
        generators=[format_pauli(g) for g in group.generators],
        elements=[format_pauli(e) for e in group.elements],
        order=group.order,
        rank=group.rank,
        is_abelian=group.is_abelian,
        phase_class=group.phase_class.value,
        contains_minus_identity=group.contains_minus_identity,
    )


def _analyze_abelian(
    group: PauliSubgroup,
    report: AnalysisReport,
    dense_limit: Optional[int],
    trials: int,
    seed: int,
    watch: Stopwatch,
) -> None:
    formula = dimension_formula(group.n_qubits, group.order, group.phase_class)
    components = iter_components(group, dense_limit)
    agrees = True
    verified = True
    while True:
        with watch.stage("decompose"):
            component = next(components, None)
        if component is None:
            break
        with watch.stage("verify"):
            character, basis = component.character, component.basis
            m = multiplicity(group, character)
            expected = formula if character.is_supported else 0
            agrees &= m == expected == basis.multiplicity == component.projector_trace
            entry = CharacterEntry(
                label=character.label,
                values={format_pauli(e): _PHASES[character.exponent(e)] for e in group.elements},
                supported=character.is_supported,
                multiplicity=m,
                formula=expected,
                basis=basis.to_json()["vectors"],
            )
            if basis.multiplicity:
                outcome = verify_dfs(group, basis, trials, seed, dense_limit=dense_limit)
                verified &= outcome.passed
                entry.verification = VerificationSummary(
                    trials=trials,
                    seed=seed,
                    tolerance=outcome.tolerance,
                    max_residual=outcome.max_residual,
                    failures=outcome.failure_count,
                    passed=outcome.passed,
                )
            report.characters.append(entry)
    report.dimension_agrees = agrees
    report.all_verified = verified


def _analyze_nonabelian(group: PauliSubgroup, report: AnalysisReport, dense_limit: Optional[int]) -> None:
    search = nonabelian_one_dim_search(group, dense_limit)
    reducibility = reducibility_sum(group, dense_limit)
    report.nonabelian = NonAbelianSummary(
        one_dim_spaces=len(search.spaces),
        total_dimension=search.total_dimension,
        reducibility_sum=reducibility.total,
        verdict=reducibility.verdict.value,
    )


@releases_action_cache
def analyze_group(
    group: PauliSubgroup,
    command: str = "analyze",
    preset: Optional[str] = None,
    dense_limit: Optional[int] = None,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    require_dfs: bool = False,
    timing: bool = False,
) -> AnalysisReport:
    trials = settings.DEFAULT_TRIALS if trials is None else trials
    seed = settings.DEFAULT_SEED if seed is None else seed
    check_dense(group.n_qubits, dense_limit)
    if require_dfs and not group.is_abelian:
        raise AnalysisRefusedError(
            f"subgroup of order {group.order} is non-Abelian and has no one-dimensional DFS"
        )
    watch = Stopwatch(timing)
    report = AnalysisReport(command=command, preset=preset, subgroup=summarize_subgroup(group))
    if group.is_abelian:
        _analyze_abelian(group, report, dense_limit, trials, seed, watch)
    else:
        with watch.stage("search"):
            _analyze_nonabelian(group, report, dense_limit)
    report.timing = watch.result
    logger.info(f"[REPORT] {command}: order {group.order}, abelian={group.is_abelian}")
    return report


def cmd_analyze(
    generators: Sequence[str],
    dense_limit: Optional[int] = None,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    require_dfs: bool = False,
    timing: bool = False,
    cap: Optional[int] = None,
) -> AnalysisReport:
    group = subgroup_from_strings(generators, cap)
    return analyze_group(
        group,
        dense_limit=dense_limit,
        trials=trials,
        seed=seed,
        require_dfs=require_dfs,
        timing=timing,
    )


def q8_summary(seed: int, draws: int = 64) -> Q8Summary:
    rep = q8_representation()
    params = random_triangular_parameters(np.random.default_rng(seed))
    kraus = triangular_kraus(*params)
    residual = code_residual(kraus)
    probe = genericity_probe(seed, draws)
    return Q8Summary(
        subspaces=[[_ket(i, 3) for i in pair] for pair in Q8_SUBSPACES],
        invariance_residuals=rep.residuals,
        code_states=[_ket(i, 3) for i in CODE_STATES],
        gamma={key: [amplitudes(row) for row in blocks[0]] for key, blocks in rep.blocks.items()},
        constrained_channel=ChannelCheck(
            parameters=amplitudes(params),
            normalization_residual=normalization_residual(kraus.operators),
            code_residual=residual,
            passed=residual < settings.RESIDUAL_TOL,
        ),
        probe=ProbeSummary(
            seed=seed,
            draws=draws,
            threshold=probe.threshold,
            unconstrained_failures=probe.unconstrained_failures,
            constrained_failures=probe.constrained_failures,
        ),
    )


def cmd_preset(
    name: str,
    dense_limit: Optional[int] = None,
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    require_dfs: bool = False,
    timing: bool = False,
) -> AnalysisReport:
    preset = get_preset(name)
    group = preset_subgroup(preset.name)
    report = analyze_group(
        group,
        command="preset",
        preset=preset.name,
        dense_limit=dense_limit,
        trials=trials,
        seed=seed,
        require_dfs=require_dfs,
        timing=timing,
    )
    if preset.name == "q8":
        report.q8 = q8_summary(settings.DEFAULT_SEED if seed is None else seed)
        report.all_verified = (
            report.q8.constrained_channel.passed and report.q8.probe.constrained_failures == 0
        )
    return report


def scan_result(group: PauliSubgroup, scan: ScanReport, state: np.ndarray, renormalized: bool) -> ScanResult:
    return ScanResult(
        subgroup=summarize_subgroup(group),
        state=amplitudes(state),
        renormalized=renormalized,
        seed=scan.seed,
        n_ops=scan.n_ops,
        min_purity=scan.min_purity,
        mean_purity=scan.mean_purity,
        min_fidelity=scan.min_fidelity,
        mean_fidelity=scan.mean_fidelity,
        max_trace_error=scan.max_trace_error,
        stays_pure=scan.stays_pure(),
        trials=[ScanTrialEntry(**vars(t)) for t in scan.trials],
    )


@releases_action_cache
def cmd_channel(
    generators: Sequence[str],
    state: Optional[str],
    trials: Optional[int] = None,
    seed: Optional[int] = None,
    n_ops: int = 4,
    dense_limit: Optional[int] = None,
    timing: bool = False,
    preset: Optional[str] = None,
) -> ScanResult:
    """With a preset, its generators are used and the state defaults to the
    preset's cross-irrep demonstration state."""
    if preset is not None:
        chosen = get_preset(preset)
        if generators:
            raise ValueError("give either generators or a preset, not both")
        generators = chosen.generators
        state = state or chosen.cross_irrep_state
    if not generators:
        raise ValueError("no generators given")
    if not state:
        raise ValueError("no state given and the preset has no demonstration state")
    group = subgroup_from_strings(generators)
    parsed = parse_state(state)
    if parsed.n_qubits != group.n_qubits:
        raise QubitCountError(
            f"state has {parsed.n_qubits} qubits, subgroup acts on {group.n_qubits}"
        )
    watch = Stopwatch(timing)
    with watch.stage("scan"):
        scan = decoherence_scan(group, parsed.vector, trials, seed, n_ops, dense_limit)
    result = scan_result(group, scan, parsed.vector, parsed.renormalized)
    result.timing = watch.result
    return result


@releases_action_cache
def cmd_sweep(
    qubit_counts: Sequence[int],
    count: int,
    seed: Optional[int] = None,
    dense_limit: Optional[int] = None,
    timing: bool = False,
) -> SweepResult:
    seed = settings.DEFAULT_SEED if seed is None else seed
    watch = Stopwatch(timing)
    with watch.stage("sweep"):
        report = sweep(qubit_counts, count, seed, dense_limit)
    return SweepResult(
        seed=seed,
        cases=[
            SweepCaseEntry(
                n_qubits=case.n_qubits,
                order=case.order,
                phase_class=case.phase_class.value,
                formula=case.formula,
                multiplicities=case.multiplicities,
                agrees=case.agrees,
            )
            for case in report.cases
        ],
        passed=report.passed,
        timing=watch.result,
    )


def cmd_dimension(n_qubits: int, order: int, phase_class: str) -> DimensionResult:
    value = dimension_formula(n_qubits, order, phase_class)
    return DimensionResult(
        n_qubits=n_qubits, order=order, phase_class=PhaseClass(phase_class).value, multiplicity=value
    )
