"""
sgcolor CLI sub-commands
"""
from . import check, color, envelope, gen, verify

__all__ = ["gen", "check", "color", "verify", "envelope"]
