import os

# Logging
LOG_LEVEL = os.getenv("CANTOR_RANK_LOG_LEVEL", "WARNING").upper()

# Check suite
CHECK_SUITE_SEED = int(os.getenv("CHECK_SUITE_SEED", "20170301"))
CHECK_SUITE_RANDOM_AUTOMATA = int(os.getenv("CHECK_SUITE_RANDOM_AUTOMATA", "200"))
CHECK_SUITE_RANDOM_PAIRS = int(os.getenv("CHECK_SUITE_RANDOM_PAIRS", "100"))
CHECK_SUITE_WORKERS = int(os.getenv("CHECK_SUITE_WORKERS", "1"))

# Random automata
RANDOM_MAX_STATES = int(os.getenv("RANDOM_MAX_STATES", "12"))
RANDOM_BOTH_EDGES_P = float(os.getenv("RANDOM_BOTH_EDGES_P", "0.5"))

# Sampling oracle
SAMPLE_GENERATORS = int(os.getenv("SAMPLE_GENERATORS", "200"))
SAMPLE_ACCESS_DEPTH = int(os.getenv("SAMPLE_ACCESS_DEPTH", "5"))

# Engine limits
FUND_SEQ_SEARCH_LIMIT = int(os.getenv("FUND_SEQ_SEARCH_LIMIT", "64"))
MAX_CLOPEN_DEPTH = int(os.getenv("MAX_CLOPEN_DEPTH", "16"))
DSL_MAX_LENGTH = int(os.getenv("DSL_MAX_LENGTH", "4096"))
DSL_MAX_NESTING = int(os.getenv("DSL_MAX_NESTING", "64"))

# Output
DOT_RANKDIR = os.getenv("DOT_RANKDIR", "LR")
STEP_FILE_PATTERN = "step_{index:02d}.dot"
