"""Experiment service: shards secrecy enumeration and reliability trials over a worker pool."""

import asyncio
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, List, Optional, Tuple

from ..adversary import AdversarySpec
from ..analysis.measures import statistical_distance_exact
from ..analysis.verification import (
    SecurityReport,
    alice_tape_count,
    check_enumeration_budget,
    count_failures,
    reliability_report,
    resolve_sets,
    secrecy_report,
    view_counts,
)
from ..protocol import Message, ProtocolConfig
from ..utils.config_manager import ConfigManager
from ..utils.errors import ConfigurationError
from ..utils.settings import resolve_worker_count

logger = logging.getLogger(__name__)

SHARDS_PER_WORKER = 4


def split_range(total: int, parts: int) -> List[Tuple[int, int]]:
    """Split [0, total) into at most ``parts`` contiguous, ordered, non-empty ranges."""
    parts = max(1, min(parts, total))
    base, extra = divmod(total, parts)
    ranges, start = [], 0
    for i in range(parts):
        stop = start + base + (1 if i < extra else 0)
        ranges.append((start, stop))
        start = stop
    return ranges


class ExperimentService:
    """Runs reliability and secrecy experiments, in parallel when more than one worker is available."""

    def __init__(self, config_manager: Optional[ConfigManager] = None, workers: Optional[int] = None):
        self.config_manager = config_manager or ConfigManager()
        self.workers = workers if workers is not None else resolve_worker_count(self.config_manager)
        if self.workers < 1:
            raise ConfigurationError(f"Worker count must be positive, got {self.workers}")

    async def _map(self, fn: Callable[..., Any], jobs: List[tuple]) -> List[Any]:
        """Run fn(*job) for every job; results come back in job order."""
        if self.workers == 1 or len(jobs) == 1:
            return [fn(*job) for job in jobs]
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor(max_workers=self.workers) as pool:
            futures = [loop.run_in_executor(pool, fn, *job) for job in jobs]
            return await asyncio.gather(*futures)

    async def run_reliability(
        self,
        config: ProtocolConfig,
        adversary: AdversarySpec,
        trials: int,
        seed: int,
        representation: str = "awtp",
    ) -> SecurityReport:
        """
        Monte Carlo reliability estimate.

        Args:
            config: protocol parameters
            adversary: strategy and read/write sets
            trials: number of independent executions
            seed: master seed; trial k depends only on (seed, k)
            representation: "awtp" or "smt" (decode through the wire representation)

        Returns:
            SecurityReport with the failure rate next to uN/q
        """
        if trials < 1:
            raise ConfigurationError(f"trials must be at least 1, got {trials}")
        try:
            sets = resolve_sets(config, adversary, seed)
            shards = split_range(trials, self.workers * SHARDS_PER_WORKER)
            logger.info(
                f"🚀 Reliability run: {trials:,} trials in {len(shards)} shards on {self.workers} workers "
                f"({config.describe()}, adversary={adversary.kind.value})"
            )
            jobs = [(config, adversary, sets, seed, start, stop, representation) for start, stop in shards]
            failures = sum(await self._map(count_failures, jobs))
            report = reliability_report(config, failures, trials)
            status = "✅" if report.within_bounds else "❌"
            logger.info(
                f"{status} Failure rate {report.measured_failure_rate:.6f} "
                f"(bound {report.bound_failure:.6f} + margin {report.margin:.6f})"
            )
            return report
        except Exception as e:
            logger.error(f"❌ Reliability run failed: {e}")
            raise

    async def _histogram(
        self,
        config: ProtocolConfig,
        message: Message,
        adversary: AdversarySpec,
        sets,
        adversary_seed: int,
        representation: str,
    ) -> Counter:
        shards = split_range(alice_tape_count(config), self.workers * SHARDS_PER_WORKER)
        jobs = [
            (config, message, adversary, sets, adversary_seed, shard, representation) for shard in shards
        ]
        total: Counter = Counter()
        for partial in await self._map(view_counts, jobs):
            total.update(partial)
        return total

    async def run_secrecy(
        self,
        config: ProtocolConfig,
        m1: Message,
        m2: Message,
        adversary: AdversarySpec,
        adversary_seed: int = 0,
        budget: Optional[int] = None,
        representation: str = "awtp",
    ) -> SecurityReport:
        """Exact view distance between two messages, enumeration sharded over Alice's tapes."""
        budget = budget if budget is not None else self.config_manager.get_enumeration_budget()
        try:
            size = check_enumeration_budget(config, budget)
            sets = resolve_sets(config, adversary, adversary_seed)
            logger.info(f"🧮 Secrecy enumeration: {size:,} tape pairs per message on {self.workers} workers")
            counts1 = await self._histogram(config, m1, adversary, sets, adversary_seed, representation)
            counts2 = counts1 if m1 == m2 else await self._histogram(
                config, m2, adversary, sets, adversary_seed, representation
            )
            distance = statistical_distance_exact(counts1, counts2)
            report = secrecy_report(config, distance, size)
            logger.info(f"🔒 Exact view distance {distance}")
            return report
        except Exception as e:
            logger.error(f"❌ Secrecy enumeration failed: {e}")
            raise
