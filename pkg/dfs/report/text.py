"""Plain-text rendering of the report models."""

from typing import List

from models.report import AnalysisReport, DimensionResult, ScanResult, SweepResult


def _num(value: float) -> str:
    return f"{value:.12g}"


def _amp(pair: List[float]) -> str:
    re, im = pair
    if im == 0:
        return _num(re)
    if re == 0:
        return f"{_num(im)}i"
    return f"({_num(re)}{'+' if im >= 0 else '-'}{_num(abs(im))}i)"


def _state(amplitudes: List[List[float]], n_qubits: int) -> str:
    terms = [
        f"{_amp(pair)}|{index:0{n_qubits}b}>"
        for index, pair in enumerate(amplitudes)
        if pair[0] != 0 or pair[1] != 0
    ]
    return " + ".join(terms) if terms else "0"


def render_analysis(report: AnalysisReport) -> str:
    group = report.subgroup
    lines = [
        f"subgroup: order {group.order} on {group.n_qubits} qubits, rank {group.rank}",
        f"  generators: {' '.join(group.generators)}",
        f"  abelian: {group.is_abelian}   phase class: {group.phase_class}",
    ]
    if report.preset:
        lines.insert(0, f"preset: {report.preset}")
    for entry in report.characters:
        lines.append(
            f"character {entry.label}: multiplicity {entry.multiplicity} "
            f"(formula {entry.formula}, supported={entry.supported})"
        )
        lines.append("  values: " + " ".join(f"{k}:{v}" for k, v in entry.values.items()))
        for n, vector in enumerate(entry.basis, start=1):
            lines.append(f"  psi_{n} = {_state(vector, group.n_qubits)}")
        if entry.verification:
            v = entry.verification
            lines.append(
                f"  verify: {v.trials} trials, max residual {v.max_residual:.3e}, "
                f"{'passed' if v.passed else 'FAILED'}"
            )
    if report.dimension_agrees is not None:
        lines.append(f"dimension formula agrees: {report.dimension_agrees}")
    if report.nonabelian:
        na = report.nonabelian
        lines.append(
            f"non-Abelian: {na.one_dim_spaces} one-dimensional joint eigenspaces, "
            f"sum |chi|^2 = {_num(na.reducibility_sum)} ({na.verdict})"
        )
    if report.q8:
        q8 = report.q8
        for z, (pair, residual) in enumerate(zip(q8.subspaces, q8.invariance_residuals), start=1):
            lines.append(f"V{z} = ({', '.join(pair)})  invariance residual {residual:.3e}")
        lines.append(f"code: {', '.join(q8.code_states)}")
        cc = q8.constrained_channel
        lines.append(
            f"constrained channel: normalization {cc.normalization_residual:.3e}, "
            f"code residual {cc.code_residual:.3e}"
        )
        lines.append(
            f"unconstrained draws breaking the code: {q8.probe.unconstrained_failures}/{q8.probe.draws}"
        )
    if report.all_verified is not None:
        lines.append(f"verified: {report.all_verified}")
    if report.timing:
        lines.append("timing: " + ", ".join(f"{k} {v:.3f}s" for k, v in report.timing.items()))
    return "\n".join(lines)


def render_scan(result: ScanResult) -> str:
    k = result.subgroup.n_qubits
    lines = [
        f"state: {_state(result.state, k)}" + (" (renormalized)" if result.renormalized else ""),
        f"channels: {len(result.trials)} x {result.n_ops} Kraus operators, seed {result.seed}",
        f"purity: min {_num(result.min_purity)}, mean {_num(result.mean_purity)}",
        f"fidelity: min {_num(result.min_fidelity)}, mean {_num(result.mean_fidelity)}",
        f"max trace error: {result.max_trace_error:.3e}",
        f"stays pure: {result.stays_pure}",
    ]
    if result.timing:
        lines.append("timing: " + ", ".join(f"{name} {v:.3f}s" for name, v in result.timing.items()))
    return "\n".join(lines)


def render_sweep(result: SweepResult) -> str:
    lines = [f"sweep seed {result.seed}: {len(result.cases)} subgroups"]
    for case in result.cases:
        mark = "ok" if case.agrees else "MISMATCH"
        lines.append(
            f"  K={case.n_qubits} N={case.order} {case.phase_class}: formula {case.formula} {mark}"
        )
    lines.append(f"passed: {result.passed}")
    return "\n".join(lines)


def render_dimension(result: DimensionResult) -> str:
    return (
        f"m_k = {result.multiplicity} for N={result.order} on K={result.n_qubits} "
        f"({result.phase_class})"
    )
