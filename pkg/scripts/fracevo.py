#!/usr/bin/env python3
"""
fracevo command line.

Run from project root, e.g.:
    python scripts/fracevo.py ml-eval --alpha 0.5 --z 0:4:0.5
    python scripts/fracevo.py diffusion --alpha 0.5 --r-grid 0:3:0.25 --t-grid 1,2 --out out/kernel.csv
    python scripts/fracevo.py verify --suite all --alpha 0.5
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT))

from src.cli import main


if __name__ == "__main__":
    sys.exit(main())
