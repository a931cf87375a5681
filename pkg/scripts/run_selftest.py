#!/usr/bin/env python3
"""Run the full fixture/invariant self-test and exit with its status."""
import sys

from leibalg.cli import main

if __name__ == "__main__":
    sys.exit(main(["selftest"] + sys.argv[1:]))
