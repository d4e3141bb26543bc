"""Enumeration of set partitions and permutations avoiding k-nestings.

Counting is done three independent ways that are cross-checked against
each other and against embedded reference sequences: a generating-tree
dynamic program over diagram labels (gentree), truncated power-series
solutions of the corresponding functional equations (series), and
definition-level brute force (oracle).
"""

__version__ = "0.1.0"
