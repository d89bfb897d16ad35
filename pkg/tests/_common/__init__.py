"""Shared test infrastructure: brute-force oracles and hypothesis strategies."""
