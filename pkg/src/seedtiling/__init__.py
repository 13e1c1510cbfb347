"""Exact tilings by a single prototile grown from a seed, with matching
rule checks and an exhaustive local prover."""

__version__ = "0.1.0"
