"""loopy-wl: r-loopy Weisfeiler-Leman refinement toolkit - core package."""

__version__ = "0.1.0"
