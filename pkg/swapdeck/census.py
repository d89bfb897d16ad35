"""Census of graph6 corpora.

The CensusPlan validates a CensusConfig before any work begins, then turns
each input line into a CensusRow. Rows are computed independently (in
worker processes when ``jobs > 1``) and always reported in input order.
Lines that fail to decode or analyse go to the plan's error policy.
"""

import json
import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from tqdm import tqdm

from .codec import decode, iter_graph6
from .config import CensusConfig
from .core.graph import structural_report
from .deck import is_removal_similar
from .error_policies import ContinueOnErrorsPolicy, ErrorPolicy
from .errors import ConfigurationError, GraphError
from .recon import ern, swap2_label
from .swap import swapping_number

logger = logging.getLogger(__name__)

TSV_COLUMNS = ("g6", "n", "m", "r", "conn", "rsim", "swap2", "swapnum", "ern")


def _flag(value: bool) -> str:
    return "yes" if value else "no"


@dataclass(frozen=True)
class CensusRow:
    """One analysed graph.

    Edgeless graphs render ``rsim``, ``swap2``, ``swapnum`` and ``ern`` as "-".
    """

    g6: str
    n: int
    m: int
    r: str          # regular degree, or "-"
    conn: str       # "yes" / "no"
    rsim: str       # removal similar: "yes" / "no"
    swap2: str      # "yes" / "no" / "inf" (empty complement)
    swapnum: str    # "2", "inf", ">cap"
    ern: str        # "3", ">cap", "nr"

    @property
    def ern_lower_bound(self) -> Optional[int]:
        if self.ern.isdigit():
            return int(self.ern)
        if self.ern.startswith(">"):
            return int(self.ern[1:]) + 1
        return None

    @property
    def is_counterexample(self) -> bool:
        """ern >= 3 without 2-swappability."""
        bound = self.ern_lower_bound
        return bound is not None and bound >= 3 and self.swap2 != "yes"

    def to_tsv(self) -> str:
        return "\t".join(str(getattr(self, column)) for column in TSV_COLUMNS)

    def to_dict(self) -> Dict:
        return asdict(self)


def census_row(text: str, config: CensusConfig) -> Optional[CensusRow]:
    """Analyse one graph6 line; None when the row filters reject it.

    Raises:
        MalformedLine: If the line does not decode
        OrderTooLarge: If the graph exceeds the order cap
    """
    g = decode(text)
    info = structural_report(g)
    if config.regular_only and not info.is_regular:
        return None
    if config.connected_only and not info.is_connected:
        return None
    m = g.edge_count
    r = str(info.regular_degree) if info.is_regular else "-"
    if m == 0:
        return CensusRow(text, g.order, 0, r, _flag(info.is_connected), "-", "-", "-", "-")
    search = config.search
    return CensusRow(
        g6=text,
        n=g.order,
        m=m,
        r=r,
        conn=_flag(info.is_connected),
        rsim=_flag(is_removal_similar(g)),
        swap2=swap2_label(g),
        swapnum=swapping_number(g, min(search.swap_cap, m)).render(),
        ern=ern(g, search.ern_cap, search.universe).render(),
    )


# (line number, text, row or None, error or None)
LineResult = Tuple[int, str, Optional[CensusRow], Optional[Exception]]


def analyse_line(item: Tuple[int, str, CensusConfig]) -> LineResult:
    """Worker entry point; never raises for library errors."""
    lineno, text, config = item
    try:
        return lineno, text, census_row(text, config), None
    except GraphError as exc:
        return lineno, text, None, exc


@dataclass
class CensusReport:
    """Rows in input order plus summary cells keyed by (ern, swap2)."""

    rows: List[CensusRow] = field(default_factory=list)
    cells: Counter = field(default_factory=Counter)
    counterexamples: List[CensusRow] = field(default_factory=list)
    errors: int = 0

    def add(self, row: CensusRow) -> None:
        self.rows.append(row)
        self.cells[(row.ern, row.swap2)] += 1
        if row.is_counterexample:
            self.counterexamples.append(row)

    def summary_line(self) -> str:
        cells = " ".join(f"{e}/{s}={count}" for (e, s), count in sorted(self.cells.items()))
        return (
            f"# rows={len(self.rows)} errors={self.errors} "
            f"counterexamples={len(self.counterexamples)} cells: {cells}"
        ).rstrip()

    def render_tsv(self) -> Iterator[str]:
        yield "\t".join(TSV_COLUMNS)
        for row in self.rows:
            yield row.to_tsv()
        yield self.summary_line()

    def to_json(self) -> str:
        return json.dumps(
            {
                "rows": [row.to_dict() for row in self.rows],
                "cells": [
                    {"ern": e, "swap2": s, "count": count}
                    for (e, s), count in sorted(self.cells.items())
                ],
                "counterexamples": [row.g6 for row in self.counterexamples],
                "errors": self.errors,
            },
            indent=2,
        )


class CensusPlan:
    """Validated execution plan for a census run.

    The plan checks the configuration before reading any input and routes
    per-line failures through an error policy.
    """

    def __init__(self, config: CensusConfig, error_policy: Optional[ErrorPolicy] = None):
        """Create and validate a census plan.

        Args:
            config: Census configuration
            error_policy: Handler for failing lines (default: report and continue)

        Raises:
            ConfigurationError: If the configuration is invalid
        """
        config_errors = config.validate()
        if config_errors:
            raise ConfigurationError(f"Invalid configuration: {'; '.join(config_errors)}")
        self.config = config
        self.error_policy = error_policy if error_policy is not None else ContinueOnErrorsPolicy()

    def _results(self, items: List[Tuple[int, str, CensusConfig]]) -> Iterator[LineResult]:
        if self.config.jobs > 1 and len(items) > 1:
            with ProcessPoolExecutor(max_workers=self.config.jobs) as pool:
                yield from pool.map(analyse_line, items, chunksize=4)
        else:
            yield from map(analyse_line, items)

    def collect(self, results: Iterable[LineResult], total: Optional[int] = None) -> CensusReport:
        """Fold per-line results (already in input order) into a report."""
        report = CensusReport()
        for lineno, text, row, error in tqdm(
            results, total=total, desc="census", unit="graph", disable=not self.config.progress
        ):
            if error is not None:
                report.errors += 1
                self.error_policy.handle(error, lineno, text)
            elif row is not None:
                report.add(row)
        logger.info("census: %d rows, %d errors, %d counterexamples",
                    len(report.rows), report.errors, len(report.counterexamples))
        return report

    def execute(self, lines: Iterable[str]) -> CensusReport:
        """Run the census over a stream of graph6 lines."""
        items = [(lineno, text, self.config) for lineno, text in iter_graph6(lines)]
        return self.collect(self._results(items), total=len(items))


def run_census(
    lines: Iterable[str],
    config: Optional[CensusConfig] = None,
    error_policy: Optional[ErrorPolicy] = None,
) -> CensusReport:
    """Convenience wrapper: plan and execute a census in one call."""
    return CensusPlan(config or CensusConfig(), error_policy).execute(lines)
