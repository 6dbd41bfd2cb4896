"""Vector calculus in geometric algebra with nested coordinate charts.

Identities are checked numerically against a second-order forward-mode
automatic-differentiation oracle working in rectangular coordinates.
"""

from .charts import ChartId, ChartPoint, from_chart, to_chart
from .errors import DomainError
from .ga3 import Multivector, geometric_product
from .harmonics import HarmonicTriple, enumerate_harmonic_monomials
from .jets import Jet2, jet_eval, laplacian_oracle
from .solutions import CylSolution, SphSolution

__version__ = "0.1.0"

__all__ = [
    "ChartId",
    "ChartPoint",
    "CylSolution",
    "DomainError",
    "HarmonicTriple",
    "Jet2",
    "Multivector",
    "SphSolution",
    "enumerate_harmonic_monomials",
    "from_chart",
    "geometric_product",
    "jet_eval",
    "laplacian_oracle",
    "to_chart",
]
