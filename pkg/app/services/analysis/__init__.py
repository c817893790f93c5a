from app.services.analysis.analysis_service import TARGET_ALIASES, VERIFY_TARGETS, AnalysisService

__all__ = ["AnalysisService", "TARGET_ALIASES", "VERIFY_TARGETS"]
