"""Bit conventions used by every module.

A basis-state index x stores register qubit j (1-based) at bit position
j - 1, i.e. x = sum_j 2**(j-1) * x_j. Bit 0 is the least significant bit,
so qubit 1 of a register toggles between even and odd indices. Diagonal
reconstructions, gate application, and amplitude readout all assume this
layout; nothing else in the package hard-codes an ordering.
"""

BIT_ORDER = "little-endian"


def register_bit(x: int, j: int) -> int:
    """Value of 1-based register qubit j inside basis index x."""
    return (x >> (j - 1)) & 1
