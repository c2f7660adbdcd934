"""
Oracle Package

Brute-force ground truth for every estimator.
"""

from .brute_force import OracleCaps, observable_words, oracle_geto, oracle_global, oracle_leto, oracle_local

__all__ = ["OracleCaps", "observable_words", "oracle_geto", "oracle_global", "oracle_leto", "oracle_local"]
