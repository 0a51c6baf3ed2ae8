from models.report import (
    AnalysisReport,
    AnalyzeRequest,
    ChannelRequest,
    DimensionRequest,
    DimensionResult,
    ScanResult,
    SweepResult,
)

__all__ = [
    "AnalysisReport",
    "AnalyzeRequest",
    "ChannelRequest",
    "DimensionRequest",
    "DimensionResult",
    "ScanResult",
    "SweepResult",
]
