"""Trace format, generators, replay runner and the command-line front end."""

from .generators import (GENERATORS, InvalidSpec, balanced_paths, bounded_arboricity,
                         generate, random_forest, random_graph, run_adversary_explicit2)
from .runner import (ENGINES, ContractViolation, RunReport, UnsupportedEvent, make_engine,
                     run, scan_capacities)
from .trace import (ColorQuery, Comment, ConnQuery, Delete, Event, Insert, ParseError,
                    Trace, dumps, load, parse_trace, save)

__all__ = [
    "GENERATORS", "InvalidSpec", "balanced_paths", "bounded_arboricity", "generate",
    "random_forest", "random_graph", "run_adversary_explicit2", "ENGINES",
    "ContractViolation", "RunReport", "UnsupportedEvent", "make_engine", "run",
    "scan_capacities", "ColorQuery", "Comment", "ConnQuery", "Delete", "Event", "Insert",
    "ParseError", "Trace", "dumps", "load", "parse_trace", "save",
]
