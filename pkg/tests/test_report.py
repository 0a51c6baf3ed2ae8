import pytest

from config import settings
from dfs.pauli.element import monomial_action
from dfs.report.analysis import cmd_analyze, cmd_channel, cmd_preset
from models.report import AnalysisReport, ScanResult


@pytest.mark.parametrize(
    "build",
    [
        lambda: cmd_analyze(["ZZII", "ZIZI"], trials=4, timing=True),
        lambda: cmd_analyze(["XXI", "IZZ"]),
        lambda: cmd_preset("q8", trials=4),
    ],
)
def test_analysis_report_json_is_lossless(build):
    report = build()
    restored = AnalysisReport.model_validate_json(report.model_dump_json())
    assert restored == report


def test_scan_result_json_is_lossless():
    result = cmd_channel(["ZI", "IZ"], "|01> + |10>", trials=4)
    assert ScanResult.model_validate_json(result.model_dump_json()) == result


def test_report_basis_matches_amplitude_layout():
    report = cmd_analyze(["ZI", "IZ"], trials=2)
    assert report.characters[1].basis == [[[0.0, 0.0], [1.0, 0.0], [0.0, 0.0], [0.0, 0.0]]]


def test_commands_release_permutation_tables():
    assert monomial_action.cache_info().maxsize == settings.ACTION_CACHE_SIZE
    cmd_analyze(["ZZZZ", "XXXX"], trials=2)
    assert monomial_action.cache_info().currsize == 0
    cmd_channel(["ZI"], "|00> + |10>", trials=2)
    assert monomial_action.cache_info().currsize == 0
