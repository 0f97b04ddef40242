from enum import StrEnum


class Color(StrEnum):
    """Edge color. Values are the symbols used in ORC2/ORC3 files."""

    RED = "R"
    BLUE = "B"

    @property
    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


class Shape(StrEnum):
    """Instance shape for random generation."""

    PAIRS = "pairs"
    TRIPLES = "triples"
    LABELS = "labels"


class PatternKind(StrEnum):
    """Target structures searched by the oracle."""

    CLIQUE = "clique"
    PATH_POWER = "path_power"
    TIGHT_PATH3 = "tight_path3"
    CLIQUE3 = "clique3"
    BLOWUP = "blowup"


class CertificateKind(StrEnum):
    """Witness kinds understood by the verifier."""

    MONO_CLIQUE = "mono_clique"
    MONO_PATH_POWER = "mono_path_power"
    MONO_TIGHT_PATH3 = "mono_tight_path3"
    MONO_CLIQUE3 = "mono_clique3"
    MONO_BLOWUP = "mono_blowup"
    NON_INCREASING_SET = "non_increasing_set"
    LEXICOGRAPHIC_SET = "lexicographic_set"
    CLIQUE_CHAIN = "clique_chain"
    HST_COPY = "hst_copy"
    CHI_FOREST = "chi_forest"
    RED_NET = "red_net"
    LABEL_MONOTONE_PATH = "label_monotone_path"
    KTT_FREE_FAMILY = "ktt_free_family"
    PATH_BUNDLE = "path_bundle"


class Notion(StrEnum):
    """Triple condition defining a non-increasing set."""

    FULL = "full"
    MIDDLE_CHAIN = "middle_chain"
    WEAK = "weak"


class Direction(StrEnum):
    """Direction of a lexicographic set or a label-monotone path."""

    FORWARD = "forward"
    BACKWARD = "backward"
    NON_INCREASING = "nonincreasing"
    INCREASING = "increasing"


class Strategy(StrEnum):
    """Non-increasing set extraction strategy."""

    PROOF_RECURSION = "proof_recursion"
    DIRECT_DFS = "direct_dfs"


class ChainMode(StrEnum):
    """Clique chain extraction mode."""

    MONO = "mono"
    RED_OR_BLUE_CLIQUE = "red_or_blue_clique"


class GoodPairVariant(StrEnum):
    """Colors considered when enumerating good pairs."""

    MONO = "mono"
    RED_ONLY = "red_only"


class Outcome(StrEnum):
    """Red-net resolution outcome."""

    KTT_FREE_FAMILY = "ktt_free_family"
    PATH_BUNDLE = "path_bundle"


class BoundFormula(StrEnum):
    """Explicit formulas known to bound_calculator."""

    ES = "es"
    CUPS_CAPS = "cupscaps"
    CLIQUE_POWERPATH = "clique_powerpath"
    POWERPATH_CLIQUE = "powerpath_clique"
    DIAGONAL_POWERPATH = "diagonal_powerpath"
    CK = "ck"
    CANONICAL_C = "canonical_c"
    F_BOUND = "f_bound"
    RED_NET_ORDER = "rednet_order"
    RAMSEY_GREEDY = "ramsey_greedy"
    BLOWUP = "blowup"
    WEAK_LEX_SIZE = "weak_lex_size"
    LEX_NON_INCREASING_SIZE = "lex_ni_size"
