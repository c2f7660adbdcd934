#!/usr/bin/env python3
"""
Run CLI

Entry point for the detsynth command line from a source checkout.

Run with: python scripts/run_cli.py estimate --plant fixtures/f1_plant.json ...
"""

import sys
from pathlib import Path

# Add project root to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from cli.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
