"""Exact classical and quantum Schubert calculus on the Lagrangian
Grassmannian LG(n, 2n), built on an integer symmetric-function engine."""

from .partitions import (
    Partition,
    dual,
    enumerate_partitions,
    grow_strips,
    prepend,
    rho,
    shrink_strips,
    star,
    straighten,
)
from .polyring import EPoly, XPoly, ddiff0, ddiff1prime, epoly_to_xpoly, is_symmetric
from .qtilde import (
    VerificationError,
    expand_in_basis,
    f_constant,
    pieri_strict,
    qtilde,
    qtilde_pair,
    structure_constants,
)
from .classical import classical_product, giambelli_check, integral, reduce_to_lg, triple_number
from .quantum import (
    eightfold_check,
    giambelli_special,
    gw,
    qprod_constants,
    qprod_pieri,
    qprod_quotient,
    quantum_pieri,
    relation_check,
    rho_product,
    vanishing_bounds,
)

__version__ = "0.1.0"
