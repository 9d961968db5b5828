"""
Named graph data for sgcolor
"""
from .catalog import GraphCatalog, get_catalog

__all__ = ["GraphCatalog", "get_catalog"]
