"""qslab: an instrumented laboratory for quicksort variants and partial-order sorting.

The package has three layers:

* exact arithmetic: harmonic numbers, a catalog of closed-form cost
  formulas, harmonic-sum identities, and indicial-polynomial analysis,
  all over exact rationals;
* instrumented algorithms: quicksort variants, selection, and
  chain-merging procedures that return exact comparison / exchange /
  stage tallies, with a pure-Python reference engine and numba-compiled
  fast kernels that consume identical random streams;
* experiments: exhaustive small-n enumeration, Monte Carlo estimation,
  partial-order generators and sorting-under-partial-information runs.
"""

from .tally import CostTally
from .errors import CapacityError, ConsistencyError, DistinctKeysError, ParameterError

__all__ = [
    "CostTally",
    "CapacityError",
    "ConsistencyError",
    "DistinctKeysError",
    "ParameterError",
]

__version__ = "0.1.0"
