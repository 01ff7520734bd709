"""
🧪 Run Theorem Sweep - every class hunt in one go, summarised per vertex count
"""

import json
import logging
import sys
import time
from datetime import datetime
from pathlib import Path

# Add parent directory
sys.path.insert(0, str(Path(__file__).parent.parent))

import pandas as pd

from config.config import Config
from config.config_loader import ConfigLoader
from config.schema import GraphClass, HuntConfig, KappaRule
from lab.hunt import hunt_counterexamples

# Setup logging
logging.basicConfig(
    level=logging.INFO,
    format='[%(asctime)s] %(message)s',
    datefmt='%H:%M:%S'
)
logger = logging.getLogger(__name__)


def run_sweep(sweeps: list, profile_name: str = "sweep", output_dir: str = "results") -> pd.DataFrame:
    """
    Hunt every (class, rule, n_max) triple and collect the summaries

    Args:
        sweeps: List of (GraphClass, KappaRule, n_max)
        profile_name: Profile supplying node budget and worker count
        output_dir: Where the JSON results file goes

    Returns:
        One row per sweep and vertex count
    """
    profile = ConfigLoader.load_template(profile_name)

    logger.info("=" * 80)
    logger.info("🧪 THEOREM SWEEP".center(80))
    logger.info("=" * 80)
    logger.info(f"⚙️  Profile: {profile.profile_name}")
    logger.info(f"🔢 Node budget: {profile.solver.node_budget or 'unlimited'}")
    logger.info(f"👷 Jobs: {profile.hunt.jobs}")
    logger.info("=" * 80)

    frames = []
    saved = []
    for graph_class, rule, n_max in sweeps:
        cfg = HuntConfig(
            n_max=n_max,
            rule=rule,
            graph_class=graph_class,
            node_budget=profile.solver.node_budget,
            jobs=profile.hunt.jobs,
        )
        logger.info(f"\n🎯 {graph_class.value} at {rule.value}, n <= {n_max}")
        start = time.perf_counter()
        report = hunt_counterexamples(cfg, progress=True)
        elapsed = time.perf_counter() - start

        summary = report.summary()
        summary.insert(0, "rule", rule.value)
        summary.insert(0, "class", graph_class.value)
        frames.append(summary)

        status = "✅" if report.exit_code() == 0 else "❌"
        logger.info(
            f"{status} {report.scanned} scanned, {len(report.violations())} violation(s), "
            f"{len(report.unknowns())} unknown in {elapsed:.1f}s"
        )
        saved.append({
            "class": graph_class.value,
            "rule": rule.value,
            "n_max": n_max,
            "seconds": round(elapsed, 3),
            "scanned": report.scanned,
            "violators": [r.to_record() for r in report.violations()],
            "unknown": [r.graph6 for r in report.unknowns()],
        })

    table = pd.concat(frames, ignore_index=True) if frames else pd.DataFrame()
    logger.info("\n" + table.to_string(index=False))

    output_file = Path(output_dir) / f"sweep_{datetime.now().strftime('%Y%m%d_%H%M%S')}.json"
    output_file.parent.mkdir(parents=True, exist_ok=True)
    with open(output_file, "w") as f:
        json.dump({"profile": profile.model_dump(), "sweeps": saved}, f, indent=2, default=str)
    logger.info(f"💾 Results saved to: {output_file}")
    return table


if __name__ == "__main__":
    # ==================== CONFIGURATION ====================

    SWEEPS = [
        (GraphClass.DELTA4, KappaRule.DELTA_PLUS_2, 7),
        (GraphClass.SUBCUBIC, KappaRule.DELTA_PLUS_1, 7),
        (GraphClass.MAD4, KappaRule.DELTA_PLUS_2, 6),
        (GraphClass.THREE_PLUS_INDEPENDENT, KappaRule.DELTA, 7),
    ]

    PROFILE = Config.PROFILE or "sweep"

    # ==================== RUN SWEEP ====================

    try:
        table = run_sweep(SWEEPS, profile_name=PROFILE)
    except KeyboardInterrupt:
        logger.info("\n⚠️ Sweep interrupted by user")
        sys.exit(130)

    sys.exit(0 if table.empty or table["violations"].sum() == 0 else 1)
