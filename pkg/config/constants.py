"""
Application-wide constants and configuration values.
"""

# Ranks
SUPPORTED_RANKS = (2, 3, 4)
TABLE_RANKS = (2, 3)

# Verification suites accepted by `verify --checks`
CHECK_NAMES = ['axioms', 'k-relations', 'sl2', 'sl3', 'confluence', 'hopf']

# Output formats
OUTPUT_FORMATS = ['json', 'csv', 'latex', 'text']
EXPORT_FORMATS = ['json', 'csv', 'text']

# Objects accepted by `export --what`
EXPORT_TARGETS = ['basis', 'central-element', 'sigma', 'gamma', 'highest-weights', 'rules']

# Check verdicts
VERDICT_HOLDS = 'holds'
VERDICT_FAILS = 'fails'
VERDICT_REPORTED = 'reported-only'
VERDICT_SKIPPED = 'skipped'

# Exit codes
EXIT_OK = 0
EXIT_ASSERTION_FAILED = 1
EXIT_USAGE = 2

# Named bases
SL2_BASIS = ['X+', 'X-', 'X0']
SL3_BASIS = ['T1', 'T2', 'X1', 'X-1', 'X2', 'X-2', 'X12', 'X-12']

# JSON schema version for exports and reports
SCHEMA_VERSION = 1
