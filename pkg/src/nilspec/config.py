"""Runtime limits. Mutable module globals; the CLI overrides them from flags."""

import os

# Hard cap on the element count of any constructed ring.
MAX_RING_SIZE = int(os.environ.get("NILSPEC_MAX_SIZE", "4096"))

# Full cubic law checks (associativity, distributivity) up to this size;
# larger rings built by formula constructors get sampled triples instead.
EXHAUSTIVE_VALIDATE_LIMIT = 300
SAMPLED_VALIDATE_TRIPLES = 20000

# Above this size, ideal enumeration on unital rings prefers splitting the
# ring along idempotents over the pairwise-sum closure.
SPLIT_THRESHOLD = 128

MAX_IDEALS = 100_000

# Node budget for the homomorphism backtracking search.
HOM_SEARCH_NODE_BUDGET = 2_000_000
