"""Solvers for finite Conway games and loopy hypergames.

The package decides the coinductive order relations on game graphs,
classifies outcomes into win and non-losing sectors, synthesizes and checks
positional strategies, and computes the generalized Grundy semantics of
impartial games.  Games are plain immutable graphs; every operation is a
pure function, safe to run concurrently.
"""

from .arena import (
    ArenaSolution,
    PlayVerdict,
    PositionalStrategy,
    Role,
    StrategyBundle,
    classify_from_arena,
    engine_choice,
    legal_moves,
    make_copycat,
    play,
    profile_from_arena,
    solve_arena,
    synthesize_nonlosing,
    synthesize_winning,
    verify_strategy,
)
from .corpus import (
    GeneratorParams,
    InvalidGraphError,
    ParseError,
    catalog,
    catalog_names,
    generate,
    parse,
    serialize,
)
from .graph import (
    GameGraph,
    MoveSets,
    Side,
    disjoint_union,
    game_sum,
    is_impartial,
    is_wellfounded,
    negate,
    reachable,
    single_position,
    validate,
)
from .grundy import (
    GrundyValue,
    ImpartialOutcome,
    Marking,
    base_marking,
    efficient_equiv,
    extend_marking,
    gen_nim_sum,
    grundy_marking,
    grundy_root,
    grundy_wf,
    impartial_equiv,
    make_canonical,
    marking_step,
    mex,
    nim_heap,
    nim_sum,
    outcome_of_value,
    parse_value,
    sector_of_outcome,
)
from .minimize import bisim_minimize, hyperbisimilar, partition_classes
from .order import (
    Classification,
    OutcomeProfile,
    Player,
    RelationPair,
    Sector,
    SolvedPair,
    classify,
    contextual_probe,
    conway_sim,
    equidetermined,
    full_pair,
    ge,
    nge,
    outcome_profile,
    sector_of,
    solve_pair,
    step_pair,
    well_behaved,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
