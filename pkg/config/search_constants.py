"""
📊 Search Constants - internal tuning
❌ Not user settings; changing them changes heuristic traces and report layouts
"""


class SearchConstants:
    """
    Internal parameters

    ⚠️ Heuristic determinism depends on these staying fixed between runs
    """

    # ==================== HEURISTIC ====================
    DEFAULT_RESTARTS: int = 8
    DEFAULT_MOVES_PER_STALL: int = 12
    STEP_FACTOR: int = 6            # pass aborts after STEP_FACTOR * m * (moves_per_stall + 1) steps
    UNCOLOR_PER_STALL: int = 1      # move (iii) displaces at most this many edges per stall

    # ==================== LAB ====================
    PREDICATE_CYCLE_BOUND: int = 5  # longest cycle the class predicates enumerate
    FACT2_SAMPLES: int = 1          # colorings of G-uv examined per edge in an audit
    GOOD3_NODE_BUDGET: int = 200_000

    # ==================== HUNT ====================
    HUNT_CHUNK_SIZE: int = 16
    RECORD_FIELDS: tuple = (
        "graph6", "n", "m", "max_degree", "kappa", "index", "violation",
        "minimal", "predicates", "lemmas",
    )
