"""
Configuration settings for the Seifert quotient toolkit.
"""

import os

# Project paths
PROJECT_ROOT = os.path.dirname(os.path.abspath(__file__))
DATA_DIR = os.path.join(PROJECT_ROOT, "data")
SMALL_GROUPS_FILE = os.path.join(DATA_DIR, "small_groups.json")
ACCEPTANCE_SCENARIOS_FILE = os.path.join(PROJECT_ROOT, "evaluation", "acceptance_scenarios.json")
ACCEPTANCE_REPORT_FILE = os.path.join(PROJECT_ROOT, "acceptance_report.json")

# Quotient search
DEFAULT_MAX_INDEX = 8
MAX_SEARCH_NODES = 2_000_000   # coset-table nodes visited per enumeration
MAX_GN_ORDER = 5_000           # largest G/G(n) realized as a multiplication table
SEARCH_WORKERS = 1             # >1 fans the first branching level out to processes

# Small groups catalogue
CATALOGUE_MAX_ORDER = 15
DEFAULT_CATALOGUE_BOUND = 12

# CLI exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNEQUAL = 2
EXIT_BUDGET = 3

# Logging
LOG_LEVEL = os.environ.get("SFS_LOG_LEVEL", "WARNING")
LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

# Randomized checks
RANDOM_SEED = 20240611
