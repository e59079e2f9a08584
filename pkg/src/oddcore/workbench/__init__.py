"""Reports, theorem checks and corpus verification."""

from .checks import CATALOG, CHECK_IDS, CheckResult, check_theorem, parse_check_ids
from .report import AnalysisReport, analyze, oracle_summary
from .suite import SuiteReport, parse_corpus, verify_suite

__all__ = [
    "CATALOG",
    "CHECK_IDS",
    "AnalysisReport",
    "CheckResult",
    "SuiteReport",
    "analyze",
    "check_theorem",
    "oracle_summary",
    "parse_check_ids",
    "parse_corpus",
    "verify_suite",
]
