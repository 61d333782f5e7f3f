from ._core import (
    FactorWitness,
    Partition,
    SquarePair,
    SuiteReport,
    WalkError,
    WalkResult,
    divisor_counts,
    encode_start,
    euler_identity_pair,
    factors_1mod4,
    factors_3mod4,
    jacobi_table,
    lemma_suites,
    partition_suites,
    r2_brute,
    reciprocal_pair,
    reciprocal_pair_skip,
    sq_diff_den,
    sq_diff_num,
    square_pairs,
    triple_product_forward,
    triple_product_reverse,
    triple_product_suites,
    verify,
    walk,
)

__all__ = [name for name in dir() if not name.startswith("_")]
