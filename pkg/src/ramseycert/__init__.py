"""Constructive certificates for cycle-versus-graph Ramsey numbers.

Given a red-blue colouring of ``K_N`` and a target graph ``H``, find a red
``C_k`` or a blue copy of ``H``, and check small Ramsey numbers exhaustively.
"""

from .errors import (
    BudgetExceededError,
    ContractViolation,
    DegreeConditionError,
    Graph6Error,
    InvalidInputError,
    RamseyCertError,
    RangeError,
    SizeLimitError,
)
from .extractor import Config, ExtractionState, PartitionResult, Trace, extract_witness, partition_H, ramsey_bound_target
from .graph import (
    ColoredComplete,
    Embedding,
    Graph,
    TargetGraph,
    chromatic_number,
    components,
    find_cycle,
    find_embedding,
    find_path,
)
from .graph6 import emit_graph6, parse_graph6
from .hamilton import hamiltonian_cycle_dirac
from .matching import MatchingCertificate, maximum_matching, tutte_berge_witness
from .matchingcase import PartiteSelection, lower_bound_coloring, matching_witness
from .oracle import brute_force_witness, check_witness, exhaustive_verify, ramsey_number_exact
from .pathramsey import (
    MultipartiteSpec,
    base_bipartite,
    bound_chi,
    bound_sqrt,
    red_path_or_blue_H,
    red_path_or_blue_multipartite,
)
from .cycles import cycle_from_first_neighbourhood, cycle_from_second_neighbourhood
from .witness import BlueCopy, BluePartite, Exhausted, RedCycle, RedPath

__all__ = [name for name in dir() if not name.startswith("_")]
