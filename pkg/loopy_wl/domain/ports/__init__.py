"""Ports implemented by infrastructure adapters."""

from .repositories import InMemoryReportRepository, NullReportRepository, ReportRepository

__all__ = ["InMemoryReportRepository", "NullReportRepository", "ReportRepository"]
