"""Countable witness spaces decided symbolically."""

from .decide import (
    descriptor_completeness, self_check, truncate, truncate_dsl, w_classify, w_converges,
    w_converges_mode, w_order, w_set_way_below_d, w_way_below_d, w_way_below_points,
)
from .facts import example63_core, example63_facts, omega_chain_facts, witness_facts
from .spaces import Example63, Family, OmegaChain, WitnessSpace, get_witness, witness_catalog
from .symbolic import (
    Chain, ChainTail, ChainTerm, Const, Fin, FiniteSet, I0, IdealDescriptor, NetDescriptor,
    SymSet, TailUnion, WitnessError, parse_ideal, parse_net, parse_point,
)

__all__ = [
    "Chain", "ChainTail", "ChainTerm", "Const", "Example63", "Family", "Fin", "FiniteSet", "I0",
    "IdealDescriptor", "NetDescriptor", "OmegaChain", "SymSet", "TailUnion", "WitnessError",
    "WitnessSpace", "descriptor_completeness", "example63_core", "example63_facts", "get_witness", "omega_chain_facts",
    "parse_ideal", "parse_net", "parse_point", "self_check", "truncate", "truncate_dsl", "w_classify",
    "w_converges", "w_converges_mode", "w_order", "w_set_way_below_d", "w_way_below_d",
    "w_way_below_points", "witness_catalog", "witness_facts",
]
