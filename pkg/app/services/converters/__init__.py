"""
Converters package for turning analysis results into report schemas.
"""
from app.services.converters.report_converter import ReportConverter

__all__ = ["ReportConverter"]
