"""
Exhaustive sweeps over S_n.

Each n is cut into lexicographic rank blocks. With more than one job the
blocks go to a process pool and results are merged as they arrive; the
sweep stops at the first counterexample.
"""

import json
import logging
import time
from multiprocessing import Pool
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from schubert_complexity.config import SweepConfig
from schubert_complexity.exceptions import SchubertError
from schubert_complexity.oracle import theorems  # noqa: F401  (registers theorems)
from schubert_complexity.oracle.base import (
    Counterexample,
    TheoremResult,
    get_theorem,
    list_theorem_names,
)

logger = logging.getLogger(__name__)

BLOCKS_PER_JOB = 8

Task = Tuple[str, int, int, int, Dict[str, Any]]


def _run_block(task: Task) -> Tuple[int, Optional[Counterexample]]:
    name, n, start, stop, options = task
    return get_theorem(name).check_block(n, start, stop, options)


def _blocks(name: str, n: int, size: int, jobs: int, options: Dict[str, Any]) -> List[Task]:
    chunk = max(1, -(-size // (jobs * BLOCKS_PER_JOB)))
    return [(name, n, s, min(s + chunk, size), options) for s in range(0, size, chunk)]


def _write_report(result: TheoremResult, report_dir: Path) -> str:
    report_dir.mkdir(parents=True, exist_ok=True)
    path = report_dir / f"{result.theorem_id}.json"
    path.write_text(json.dumps(result.to_dict(), indent=2))
    return str(path)


def verify(theorem_id: str, config: SweepConfig) -> TheoremResult:
    """
    Check one theorem for every n up to its n_max.

    Raises:
        UnknownTheoremError: if no theorem has this id
    """
    theorem = get_theorem(theorem_id)
    n_max = config.n_max(theorem.scale)
    options = {"chain_limit": config.chain_limit}
    result = TheoremResult(theorem_id=theorem_id, n_max=n_max)
    started = time.perf_counter()

    for n in theorem.n_values(n_max):
        tasks = _blocks(theorem_id, n, theorem.size(n), config.jobs, options)
        if config.jobs > 1 and len(tasks) > 1:
            with Pool(processes=config.jobs) as pool:
                for checked, failure in pool.imap_unordered(_run_block, tasks):
                    result.checked += checked
                    if failure is not None:
                        result.passed, result.counterexample = False, failure
                        break
        else:
            for task in tasks:
                checked, failure = _run_block(task)
                result.checked += checked
                if failure is not None:
                    result.passed, result.counterexample = False, failure
                    break
        if not result.passed:
            break
        logger.debug(f"{theorem_id}: n = {n} done, {result.checked} items so far")

    result.seconds = time.perf_counter() - started
    if not result.passed or config.write_reports:
        result.report_path = _write_report(result, config.report_dir)

    if result.passed:
        logger.info(f"{theorem_id}: passed {result.checked} items up to n = {n_max} in {result.seconds:.2f}s")
    else:
        logger.warning(f"{theorem_id}: counterexample {result.counterexample}")
    return result


def run_verification(theorem_id: str, config: SweepConfig) -> Dict[str, Any]:
    """
    Run verify and wrap the outcome, never raising for domain errors.

    Returns:
        {"success": True, "result": {...}} or {"success": False, "error": ...}
    """
    try:
        return {"success": True, "result": verify(theorem_id, config).to_dict()}
    except SchubertError as e:
        logger.error(f"Verification of {theorem_id} failed: {e}")
        return {"success": False, "error": str(e)}


def verify_all(config: SweepConfig) -> List[TheoremResult]:
    return [verify(name, config) for name in list_theorem_names()]
