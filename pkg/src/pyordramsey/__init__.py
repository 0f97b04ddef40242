from importlib.metadata import version

from .basic import (
    chain_values,
    chvatal_komlos_extract,
    clique_chain_extract,
    extract_clique_vs_monopath,
    monotone_path_lengths,
    ramsey_extract,
)
from .bounds import bound, bound_calculator, canonical_c, canonical_c_closed, f_bound
from .canonical import (
    WeakLexStructure,
    extract_3uniform_clique_vs_tightpath,
    extract_hst,
    extract_lexicographic_nonincreasing,
    extract_non_increasing,
    find_hst_copy,
    iter_hst_copies,
    iter_non_increasing_sets,
    lexicographic_from_weak,
    tightpath_reduction,
    trace_tight_path,
    weakly_lex_decompose,
)
from .codec import dump_certificate, dumps, load_certificate, loads
from .enums import (
    BoundFormula,
    CertificateKind,
    ChainMode,
    Color,
    Direction,
    GoodPairVariant,
    Notion,
    Outcome,
    PatternKind,
    Shape,
    Strategy,
)
from .exceptions import (
    EnumerationBudgetExceeded,
    ExhaustedWithoutClique,
    FormatError,
    GreedyColorOverflow,
    InputError,
    ParadoxError,
    RamseyError,
    SearchCapExceeded,
)
from .generators import (
    build_two_coloring,
    generate_es_extremal,
    generate_lower_bound_blocked,
    generate_random,
)
from .models import (
    BoundRequest,
    FunctionFamily,
    PairLabeling,
    PatternSpec,
    TripleColoring,
    TwoColoring,
)
from .oracle import (
    GoldenRecord,
    Oracle,
    OracleConfig,
    Threshold,
    brute_force_witness,
    exact_f,
    exact_g,
    exact_ordered_ramsey,
    read_golden,
    write_golden,
)
from .pathpower import (
    GoodPair,
    WindowChi,
    blowup_chi,
    enumerate_good_pairs,
    extract_blowup_vs_clique,
    extract_diagonal_pathpower,
    extract_pathpower_vs_clique,
    find_semi_red_clique,
    window_chi,
)
from .rednet import (
    BlockFamily,
    NetResolution,
    assemble_red_net,
    build_blue_clique_blocks,
    build_chi_forest,
    compute_block_chi,
    extract_clique_vs_powerpath,
    red_clique_from_ktt_free,
    resolve_red_net,
    thirds,
)
from .witness import Certificate, OrderedForest, RedNetCertificate, Verdict, verify_certificate

__version__ = version("pyordramsey")

__all__ = [
    # Instances
    "TwoColoring",
    "TripleColoring",
    "PairLabeling",
    "FunctionFamily",
    "PatternSpec",
    "BoundRequest",
    # Generators and formats
    "build_two_coloring",
    "generate_random",
    "generate_lower_bound_blocked",
    "generate_es_extremal",
    "dumps",
    "loads",
    "dump_certificate",
    "load_certificate",
    # Bounds
    "bound",
    "bound_calculator",
    "canonical_c",
    "canonical_c_closed",
    "f_bound",
    # Certificates
    "Certificate",
    "OrderedForest",
    "RedNetCertificate",
    "Verdict",
    "verify_certificate",
    # Foundational extractors
    "extract_clique_vs_monopath",
    "ramsey_extract",
    "chvatal_komlos_extract",
    "monotone_path_lengths",
    "chain_values",
    "clique_chain_extract",
    # Path powers
    "WindowChi",
    "GoodPair",
    "window_chi",
    "enumerate_good_pairs",
    "extract_pathpower_vs_clique",
    "extract_diagonal_pathpower",
    "blowup_chi",
    "find_semi_red_clique",
    "extract_blowup_vs_clique",
    # Canonical orderings
    "tightpath_reduction",
    "trace_tight_path",
    "extract_3uniform_clique_vs_tightpath",
    "iter_non_increasing_sets",
    "iter_hst_copies",
    "find_hst_copy",
    "extract_hst",
    "extract_non_increasing",
    "WeakLexStructure",
    "weakly_lex_decompose",
    "lexicographic_from_weak",
    "extract_lexicographic_nonincreasing",
    # Red nets
    "thirds",
    "BlockFamily",
    "NetResolution",
    "build_blue_clique_blocks",
    "compute_block_chi",
    "build_chi_forest",
    "assemble_red_net",
    "resolve_red_net",
    "red_clique_from_ktt_free",
    "extract_clique_vs_powerpath",
    # Oracle
    "Oracle",
    "OracleConfig",
    "Threshold",
    "GoldenRecord",
    "brute_force_witness",
    "exact_ordered_ramsey",
    "exact_g",
    "exact_f",
    "write_golden",
    "read_golden",
    # Enums
    "Color",
    "Shape",
    "PatternKind",
    "CertificateKind",
    "Notion",
    "Direction",
    "Strategy",
    "ChainMode",
    "GoodPairVariant",
    "Outcome",
    "BoundFormula",
    # Exceptions
    "RamseyError",
    "InputError",
    "FormatError",
    "ParadoxError",
    "GreedyColorOverflow",
    "ExhaustedWithoutClique",
    "EnumerationBudgetExceeded",
    "SearchCapExceeded",
]
