"""Periods of Ducci sequences: exact computation, partition lower bounds, and checks."""

from .arith import Factorization, euler_phi, factor, is_prime, lcm_all, mult_order
from .dynamics import CycleResult, ducci_step, simulate_binary_period, simulate_period
from .gf2 import FieldCtx, FieldElem, elem_order, find_irreducible, is_irreducible, nth_root_of_unity
from .partitions import (
    CosetSet,
    PartitionVector,
    best_coset,
    coset_set,
    partition_count,
    partition_enumerate,
    unit_coset_representatives,
    verify_injection,
)
from .period import PeriodRecord, bounds, period_algebraic, period_any, validate_theorems

__version__ = "0.1.0"
