#!/usr/bin/env python3
"""Script to check proofs, run programs and format sources without installing the package."""

import sys
from pathlib import Path

# Add src to path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root / "src"))

from hoarekit.cli import main

if __name__ == "__main__":
    main()
