"""Order-blind uncertainty measures for a BPA.

Both sums run over focal elements in ascending-bitmask order, so the
result does not depend on how the entries were listed.
"""

import math

from .frames import BasicProbabilityAssignment


def _log(base: float):
    if base == 2:
        return math.log2
    return lambda x: math.log(x, base)


def dp_hartley_entropy(bpa: BasicProbabilityAssignment, base: float = 2) -> float:
    """Dubois & Prade weighted Hartley entropy, ``sum m(A) * log|A|``.

    Exactly zero when every focal element is a singleton.
    """
    log = _log(base)
    total = 0.0
    for focal, mass in bpa.canonical():
        card = focal.cardinality
        if card > 1:
            total += mass * log(card)
    return total


def deng_entropy(bpa: BasicProbabilityAssignment, base: float = 2) -> float:
    """Deng entropy, ``-sum m(A) * log(m(A) / (2**|A| - 1))``.

    Reduces to Shannon entropy on an all-singleton BPA. ``base=math.e``
    gives the value in nats.
    """
    log = _log(base)
    total = 0.0
    for focal, mass in bpa.canonical():
        total -= mass * log(mass / (2**focal.cardinality - 1))
    # -0.0 from a single certain focal element
    return total + 0.0
