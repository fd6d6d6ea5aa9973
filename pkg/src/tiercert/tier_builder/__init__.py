from .builder import Builder, BuilderTrace, FiltrationStep, PrimeTask, SupportCheck, certify
from .config import BuilderConfig
from .pd import LocalPD, ext_into_quotient, pd_at_prime
from .decompose import Decomposition, DerivationNotNormalized, decompose_tier, finite_length, pd_at_most
