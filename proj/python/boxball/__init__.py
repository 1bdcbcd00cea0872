"""Box-ball automaton: evolution rules, stack permutations, chain invariants,
insertion tableaux, carrier energies and the cross-model verification suite."""

from ._boxball import (
    BoxBallState,
    Carrier,
    CheckResult,
    EnergyReport,
    PairRecord,
    ParenSeq,
    RStepResult,
    SolitonProfile,
    SolitonRun,
    TransferResult,
    Walk,
    all_passed,
    antichain_decomposition,
    delete_concave,
    delete_convex,
    depth_chains,
    energy_profile,
    energy_sites_predicted,
    evolve_reflect,
    evolve_tts,
    greene_d,
    greene_i,
    is_asymptotic,
    lambda_of,
    lambda_prime_of,
    match_rounds,
    match_stack,
    p_shape,
    p_symbol,
    parse_state,
    parse_walk,
    r_step,
    render_paren_lines,
    render_walk,
    row_insert,
    run_verification,
    same_walk,
    solitons,
    stack_permutation,
    to_walk,
    transfer,
    transpose,
    walk_to_state,
)

__all__ = [
    "BoxBallState",
    "Carrier",
    "CheckResult",
    "EnergyReport",
    "PairRecord",
    "ParenSeq",
    "RStepResult",
    "SolitonProfile",
    "SolitonRun",
    "TransferResult",
    "Walk",
    "all_passed",
    "antichain_decomposition",
    "delete_concave",
    "delete_convex",
    "depth_chains",
    "energy_profile",
    "energy_sites_predicted",
    "evolve_reflect",
    "evolve_tts",
    "greene_d",
    "greene_i",
    "is_asymptotic",
    "lambda_of",
    "lambda_prime_of",
    "match_rounds",
    "match_stack",
    "p_shape",
    "p_symbol",
    "parse_state",
    "parse_walk",
    "r_step",
    "render_paren_lines",
    "render_walk",
    "row_insert",
    "run_verification",
    "same_walk",
    "solitons",
    "stack_permutation",
    "to_walk",
    "transfer",
    "transpose",
    "walk_to_state",
]
