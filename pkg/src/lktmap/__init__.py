"""Exact lowest-K-type computations for GL(n, H)."""
from .errors import AmbiguityError, BoxTooSmall, EmptyError, LKTError, TieError, TruncationError
from .weights import LeviShape, dominate_K, norm_sq, rho_constants
from .characters import FormalCharacter, branch_to_su2_power, weyl_character
from .tempiric import VirtualTempiric, expand_k_irrep, expand_levi_irrep, lkt_of_tempiric, m_mult
from .orbits import OrbitDatum, build_orbit, enumerate_lifts, restrict_to_stabilizer
from .pushforward import LktResult, closed_form_lkt, largest_tempiric, lkt_map, pushforward, verify_bijection
from .cousin import FpfInvolution, closure_leq, enumerate_fpf, verify_zuckerman, zuckerman_terms

__version__ = "0.1.0"
