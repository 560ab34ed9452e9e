"""Bipartite permutation graphs: generators, recognizers, letter codecs, ISI solvers,
parameters and universal graphs."""

from .errors import BpgLabError, CapExceeded, GraphFormatError, NotBPGError, UnsupportedInstance
from .graph import (Graph, delete_vertex, disjoint_union, induced_subgraph, local_complement,
                    pivot, read_graph, read_graphs, write_graph, write_graphs)
from .canon import (automorphism_count, canonical_code, canonical_graph, enumerate_graphs,
                    is_isomorphic)
from .recognition import ClassId, Embedding, find_induced, is_member, parse_class
from .letters import (ChainWordPair, LetterSystem, encode_bpg, encode_chain, enumerate_bpg,
                      letter_graph, lettericity_exact, min_path_alphabet, parikh_graph)
from .universal import (rigid_graph, universal_bpg, universal_chain, universal_star_forest,
                        universal_star_forest_bounded, verify_universal, witness_rigid)
from .isi import isi_auto, isi_bruteforce, isi_linear_forest, isi_p5free
from .parameters import (KGraph, WordSource, build_UFK, build_UwK, distinguishing_number,
                         graph_metrics, neighbourhood_diversity)

__version__ = "0.1.0"

__all__ = [
    "BpgLabError",
    "CapExceeded",
    "GraphFormatError",
    "NotBPGError",
    "UnsupportedInstance",
    "Graph",
    "delete_vertex",
    "disjoint_union",
    "induced_subgraph",
    "local_complement",
    "pivot",
    "read_graph",
    "read_graphs",
    "write_graph",
    "write_graphs",
    "automorphism_count",
    "canonical_code",
    "canonical_graph",
    "enumerate_graphs",
    "is_isomorphic",
    "ClassId",
    "Embedding",
    "find_induced",
    "is_member",
    "parse_class",
    "ChainWordPair",
    "LetterSystem",
    "encode_bpg",
    "encode_chain",
    "enumerate_bpg",
    "letter_graph",
    "lettericity_exact",
    "min_path_alphabet",
    "parikh_graph",
    "rigid_graph",
    "universal_bpg",
    "universal_chain",
    "universal_star_forest",
    "universal_star_forest_bounded",
    "verify_universal",
    "witness_rigid",
    "isi_auto",
    "isi_bruteforce",
    "isi_linear_forest",
    "isi_p5free",
    "KGraph",
    "WordSource",
    "build_UFK",
    "build_UwK",
    "distinguishing_number",
    "graph_metrics",
    "neighbourhood_diversity",
]
