"""Async graph6 file reader and census driver."""

import asyncio
import logging
from concurrent.futures import Executor, ProcessPoolExecutor
from pathlib import Path
from typing import AsyncIterator, List, Optional, Tuple, Union

import aiofiles

from ..census import CensusPlan, CensusReport, LineResult, analyse_line
from ..codec import graph_line
from ..config import CensusConfig
from ..error_policies import ErrorPolicy

logger = logging.getLogger(__name__)


async def iter_graph6_file_async(path: Union[str, Path]) -> AsyncIterator[Tuple[int, str]]:
    """Yield ``(line_number, text)`` for each graph line of a graph6 file.

    Args:
        path: File to read

    Yields:
        1-based line numbers with the stripped graph text, skipping blank
        lines, ``#`` comments and a bare ``>>graph6<<`` header
    """
    lineno = 0
    async with aiofiles.open(path, mode="r", encoding="ascii", errors="replace") as fh:
        async for raw in fh:
            lineno += 1
            text = graph_line(raw)
            if text is not None:
                yield lineno, text


async def census_file_async(
    path: Union[str, Path],
    config: Optional[CensusConfig] = None,
    error_policy: Optional[ErrorPolicy] = None,
) -> CensusReport:
    """Run a census over a graph6 file.

    At most ``config.max_concurrent`` rows are in flight at once. Rows are
    computed in worker processes when ``config.jobs > 1``, otherwise in the
    loop's default thread pool. The report lists rows in file order.

    Raises:
        ConfigurationError: If the configuration is invalid
    """
    config = config or CensusConfig()
    plan = CensusPlan(config, error_policy)
    semaphore = asyncio.Semaphore(config.max_concurrent)
    loop = asyncio.get_running_loop()
    executor: Optional[Executor] = ProcessPoolExecutor(config.jobs) if config.jobs > 1 else None

    async def analyse(lineno: int, text: str) -> LineResult:
        async with semaphore:
            return await loop.run_in_executor(executor, analyse_line, (lineno, text, config))

    try:
        tasks: List[asyncio.Future] = []
        async for lineno, text in iter_graph6_file_async(path):
            tasks.append(asyncio.ensure_future(analyse(lineno, text)))
        results = await asyncio.gather(*tasks)
    finally:
        if executor is not None:
            executor.shutdown(wait=True)
    logger.debug("read %d graph lines from %s", len(results), path)
    return plan.collect(results, total=len(results))
