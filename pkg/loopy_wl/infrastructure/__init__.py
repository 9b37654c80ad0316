"""Infrastructure adapters: codecs, dataset loading, report writers and the worker pool."""

from .reports import FileReportRepository
from .worker_pool import ordered_map

__all__ = ["FileReportRepository", "ordered_map"]
