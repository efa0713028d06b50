"""Dynamic graph coloring engines with brute-force oracles and a trace bench."""

from .arboricity import ArbColoring, Orientation
from .delta1 import Delta1Coloring
from .errors import (AlreadyPresent, AuxVertexInUse, CapacityExceeded, DynColorError,
                     EdgeExists, EdgeMissing, IsRoot, NotARoot, NotPresent,
                     OrientationError, PaletteExhausted, SameRoot, SameTree, SelfLoop,
                     VertexOutOfRange)
from .explicit2 import Explicit2Coloring
from .full2 import Full2Coloring
from .graph import ColorTally, DynGraph, InsertOutcome, LinkedSet, Metrics
from .hdt import DeleteOutcome, HdtConnectivity
from .implicit2 import Implicit2Coloring
from .inclog import LogColoring, palette_width, select_free_color
from .linkcut import LcForest
from .paritydsu import ParityDsu

__all__ = [
    "ArbColoring", "Orientation", "Delta1Coloring", "Explicit2Coloring",
    "Full2Coloring", "ColorTally", "DynGraph", "InsertOutcome", "LinkedSet",
    "Metrics", "DeleteOutcome", "HdtConnectivity", "Implicit2Coloring",
    "LogColoring", "palette_width", "select_free_color", "LcForest", "ParityDsu",
    "DynColorError",
    "VertexOutOfRange",
    "SelfLoop",
    "EdgeExists",
    "EdgeMissing",
    "NotARoot",
    "IsRoot",
    "SameTree",
    "SameRoot",
    "AlreadyPresent",
    "NotPresent",
    "CapacityExceeded",
    "PaletteExhausted",
    "AuxVertexInUse",
    "OrientationError",
]
