"""Linkless embeddability of graphs via the Petersen-family excluded minors.

Also provides Y-Delta/Delta-Y exchanges, mod-2 linking numbers in convex
spatial diagrams, and the web of Kuratowski subgraphs of a graph.
"""
from .diagram import (Crossing, Diagram, Mod2, conway_gordon_sum, convex_diagram, crossing_change,
                      disjoint_cycle_pairs, linking_number)
from .errors import GraphInputError, ParseError, ResourceLimitError
from .exchange import ExchangeMove, delta_y, exchange_closure, petersen_family, y_delta
from .graph import (Graph, KuratowskiWitness, PlanarityVerdict, canonical_form, complete_bipartite,
                    complete_graph, contract_edge, cycle_graph, delete_edge, enumerate_cycles, is_planar,
                    path_graph, petersen_graph, simplify, vertex_connectivity)
from .io import from_graph6, parse_edge_list, parse_graph, to_graph6
from .minor import LinklessVerdict, MinorModel, has_minor, is_linklessly_embeddable, verify_minor_model
from .subdivision import SubdivisionModel, verify_subdivision
from .web import (KuratowskiWeb, build_web, enumerate_kuratowski_subgraphs, is_1_adjacent, is_2_adjacent,
                  is_connected_web)

__version__ = "0.1.0"
