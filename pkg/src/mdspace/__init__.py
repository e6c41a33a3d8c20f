"""Verification workbench for monotone determined spaces."""

from .classify import classify
from .convergence import Bounds, Mode, Net, converges_mode, induced_topology
from .ideal import Ideal, IndexSet, make_I0
from .poset import FinitePoset, enumerate_posets
from .report import Report, report_emit
from .rudin import rudin_transversal
from .space import FiniteSpace, closure_suite, load_space
from .suites import SuiteSpec, run_suite

__version__ = "0.1.0"

__all__ = [
    "Bounds", "FinitePoset", "FiniteSpace", "Ideal", "IndexSet", "Mode", "Net", "Report", "SuiteSpec",
    "classify", "closure_suite", "converges_mode", "enumerate_posets", "induced_topology", "load_space",
    "make_I0", "report_emit", "rudin_transversal", "run_suite",
]
