#!/usr/bin/env python3
"""Main entry point for the AWTP-PD experiment runner."""

import os
import sys

# Add the project root to Python path
project_root = os.path.dirname(__file__)
sys.path.insert(0, project_root)

from awtp_pd.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
