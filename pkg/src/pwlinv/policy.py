"""Numeric tolerances, collected in one mutable record.

Every tolerance the library applies lives here so that a caller who needs a
looser or tighter regime can adjust a single object (``pwlinv.policy``)
instead of chasing constants through the modules.
"""

import math
from dataclasses import dataclass


@dataclass
class NumericPolicy:
    # absolute tolerance on angles (radians) for boundary membership
    angle_tol: float = 1e-12
    # slack for fan checks: consecutive ends meeting starts, widths summing to a turn
    partition_tol: float = 1e-9
    # relative mismatch allowed between adjacent matrices on a shared ray
    continuity_tol: float = 1e-9
    # 2x2 singularity: |det| <= rel * max(1, frobenius_norm^2)
    mat2_singular_rel: float = 1e-12
    # kxk singularity: |det| <= rel * (max row norm)^k
    matk_singular_rel: float = 1e-10
    # how far the winding sum may sit from an integer multiple of 2*pi
    degree_int_tol: float = 1e-6
    # arc bisection refines until consecutive image directions differ by less
    bisect_gap: float = math.pi / 2
    # collision witnesses must have images agreeing to this, relative
    witness_image_tol: float = 1e-8
    # preimage candidates closer than rel*|q| are the same point
    preimage_dedupe_rel: float = 1e-9
    # inverse roundtrip accuracy, relative to max(1, |x|)
    roundtrip_rel: float = 1e-9


policy = NumericPolicy()
