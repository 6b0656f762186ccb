"""
Free associative algebra with oriented rewriting: RTT relations, deformed
boson algebras and their covariance.
"""

from .element import FreeElement, Word, format_word
from .rewriting import (
    DEFAULT_MAX_DEGREE,
    DegreeBoundExceeded,
    NonConfluent,
    Rule,
    RewriteSystem,
    reduce,
    enumerate_words,
    check_confluence,
    require_confluent,
)
from .rtt import rtt_generators, rtt_name, rtt_relations, rtt_system, counit_check
from .boson import (
    CREATOR,
    TILDE,
    PLAIN,
    boson_generators,
    boson_relations,
    creator_relations,
    creator_system,
    expand_components,
    generator_name,
    index_pairs,
    metric_link_check,
    mixed_plain_relations,
    mixed_tilde_relations,
    plain_annihilator_relations,
    second_set_check,
    system_difference,
    tilde_annihilator_relations,
    trivial_factor,
)
from .covariance import covariance_check

__all__ = [
    "FreeElement",
    "Word",
    "format_word",
    "DEFAULT_MAX_DEGREE",
    "DegreeBoundExceeded",
    "NonConfluent",
    "Rule",
    "RewriteSystem",
    "reduce",
    "enumerate_words",
    "check_confluence",
    "require_confluent",
    "rtt_generators",
    "rtt_name",
    "rtt_relations",
    "rtt_system",
    "counit_check",
    "CREATOR",
    "TILDE",
    "PLAIN",
    "boson_generators",
    "boson_relations",
    "creator_relations",
    "creator_system",
    "expand_components",
    "generator_name",
    "index_pairs",
    "metric_link_check",
    "mixed_plain_relations",
    "mixed_tilde_relations",
    "plain_annihilator_relations",
    "second_set_check",
    "system_difference",
    "tilde_annihilator_relations",
    "trivial_factor",
    "covariance_check",
]
