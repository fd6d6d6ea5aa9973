"""Tier certificates: data model, canonical JSON, and the independent verifier."""

from .model import (
    Cosyzygy,
    Extension,
    Isomorphism,
    LeafSingPrime,
    Step,
    StructuralError,
    Summand,
    TierCertificate,
    Zero,
    extension_depth,
    leaves,
    tier_index,
    walk,
)
from .serialize import CertificateParseError, cert_to_obj, dumps, dumps_obj, loads, obj_to_cert, roundtrip
from .verify import Report, verify
