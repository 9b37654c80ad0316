#!/usr/bin/env python
"""Entry script: the loopy-wl CLI, or the Textual explorer with --tui."""

import sys

if __name__ == "__main__":
    if "--tui" in sys.argv:
        from loopy_wl.presentation.app import run_app
        run_app()
    else:
        from loopy_wl.presentation.cli import main
        sys.exit(main(sys.argv[1:]))
