"""Unit-distance embeddings of small graphs: verification, search and bounds."""

from .graph import Graph, GraphError, make_family, join, four_cycles, chromatic_number
from .catalog import catalog_get, CATALOG_IDS, PAPER_IDS
from .embedding import Embedding, Precision, ToleranceConfig, verify, verify_exact

__version__ = "0.1.0"
