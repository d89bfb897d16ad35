"""swapdeck - edge reconstruction and swapping numbers of small graphs.

swapdeck computes edge-decks, blockers, edge-reconstruction numbers and
swapping numbers of simple graphs up to 16 vertices, generates the regular
families K_n - M, K_n - H, K_n,n - M and K_n,n - H, and checks the known
results about them exhaustively.

Library:
    from swapdeck import decode, ern, is_k_swappable
    ern(decode("Dhc")).render()          # '3'

Command line:
    swapdeck ern "C~"
    swapdeck census corpus.g6 --jobs 4
"""

from .version import __version__, VERSION, BASE_VERSION, PIP_VERSION

# core first: iso depends on the codec, which depends on core.graph
from .core import (
    MAX_ORDER,
    Edge,
    Graph,
    add_edges,
    are_isomorphic,
    canonical_form,
    complement,
    remove_edges,
    structural_report,
)
from .codec import decode, encode
from .config import BlockerUniverse, CensusConfig, SearchConfig
from .deck import EdgeDeck, SubDeck, edge_deck, enumerate_subdecks, is_removal_similar
from .families import FamilyKind, FamilySpec, bipartite_complement, build, generate
from .swap import (
    SwapWitness,
    find_swap,
    full_2_swappable,
    is_k_swappable,
    swap_witness_family,
    swapping_number,
)
from .recon import (
    BlockerCertificate,
    ErnResult,
    blockers_of,
    ern,
    verify_theorem1_sweep,
    verify_theorem2,
    verify_theorem7,
)
from .census import CensusPlan, CensusReport, CensusRow, run_census
from . import aio

__all__ = [
    "__version__",
    "MAX_ORDER",
    "Edge",
    "Graph",
    "add_edges",
    "are_isomorphic",
    "canonical_form",
    "complement",
    "remove_edges",
    "structural_report",
    "decode",
    "encode",
    "BlockerUniverse",
    "CensusConfig",
    "SearchConfig",
    "EdgeDeck",
    "SubDeck",
    "edge_deck",
    "enumerate_subdecks",
    "is_removal_similar",
    "FamilyKind",
    "FamilySpec",
    "bipartite_complement",
    "build",
    "generate",
    "SwapWitness",
    "find_swap",
    "full_2_swappable",
    "is_k_swappable",
    "swap_witness_family",
    "swapping_number",
    "BlockerCertificate",
    "ErnResult",
    "blockers_of",
    "ern",
    "verify_theorem1_sweep",
    "verify_theorem2",
    "verify_theorem7",
    "CensusPlan",
    "CensusReport",
    "CensusRow",
    "run_census",
    "aio",
]
