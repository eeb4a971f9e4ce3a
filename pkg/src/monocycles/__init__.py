"""Monomial cycles in Koszul homology of monomial ideals: boundary ideals,
products of monomial cycles, Golod checks and linear-quotient bases."""

from .boundary_ideal import boundary_ideal, is_boundary_monomial_cycle
from .errors import (
    DegreeOneGenerator,
    HypothesisFailure,
    InstanceTooLarge,
    MonocyclesError,
    NotACycle,
    NotHomogeneous,
    PathDisagreement,
)
from .exactalg import GF, GF2, GF3, QQ, FieldSpec
from .golod import golod4, monomial_products_vanish, pairing_rank
from .koszul import KoszulChain, differential, is_boundary_oracle, total_betti, wedge
from .linquot import monomial_basis, recognize
from .monomials import MonomialIdeal
from .symmetric import SymmetricIdealSpec, ideal_from_partitions, symmetric_monprod_vanish, vp_check

__version__ = "0.1.0"
