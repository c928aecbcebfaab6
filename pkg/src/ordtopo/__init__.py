"""Ordinals below omega_1^omega, GO-spaces over them, and first-countable refinements."""
from .ordinal import (BIG_OMEGA, OMEGA, ONE, ZERO, CofClass, Ordinal, add,
                      classify, cmp, mul, parse, sub, to_string)
from .refine import refine_first_countable
from .embed import (PartitionSchedule, go5_transform, is_hered_paracompact,
                    omega_sum_with_top, reembed, reembed_double, split_at_gaps)

__all__ = [
    "BIG_OMEGA", "OMEGA", "ONE", "ZERO", "CofClass", "Ordinal", "add",
    "classify", "cmp", "mul", "parse", "sub", "to_string",
    "refine_first_countable", "PartitionSchedule", "go5_transform",
    "is_hered_paracompact", "omega_sum_with_top", "reembed", "reembed_double",
    "split_at_gaps",
]
