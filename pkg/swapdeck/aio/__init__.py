"""Asynchronous corpus reading for swapdeck.

Graph analysis is CPU-bound, so only file reading is natively async; rows
are computed in an executor with a bounded number in flight.
"""

from .reader import census_file_async, iter_graph6_file_async

__all__ = [
    "census_file_async",
    "iter_graph6_file_async",
]
