"""Digit-exact (u, m, e, s)-nets, mixed (ordered) orthogonal arrays, and bounds.

The package materializes one combinatorial dictionary in three languages:

* low-discrepancy point sets with per-coordinate resolution vectors,
  verified exhaustively against elementary boxes (:mod:`evnets.netverify`);
* mixed orthogonal arrays obtained from leading digits
  (:mod:`evnets.oa`) and ordered mixed arrays obtained from digit blocks,
  including the inverse reconstruction (:mod:`evnets.ooa`);
* exact necessary conditions (Rao-type row bounds, per-resolution coordinate
  budgets) in :mod:`evnets.bounds`, plus constructive character-sum
  certificates in :mod:`evnets.dualcert`.

Deterministic generators and a desk-scale existence search live in
:mod:`evnets.corpus`; canonical text formats in :mod:`evnets.io`; the
command-line interface in :mod:`evnets.cli`.
"""

from .bounds import (
    Condition,
    FeasibilityReport,
    Signature,
    feasibility_report,
    net_rao_check,
    rao_feasible,
    rao_rhs,
    seq_kr_check,
    seq_lcm_check,
)
from .core import EVector, MixedOA, MixedOOA, PointSet, Verdict
from .corpus import (
    SearchResult,
    digital_net,
    faure,
    flip_digit,
    grid_1d,
    hammersley,
    random_pointset,
    search_net,
)
from .dualcert import (
    FunctionTuple,
    build_block_family,
    char_vector,
    diff,
    gram_certificate,
    height,
    profile,
)
from .errors import FormatError, ParamError, PrecisionError, VerificationError
from .io import (
    NetFile,
    parse_function_tuples,
    parse_moa,
    parse_mooa,
    parse_net,
    serialize_moa,
    serialize_mooa,
    serialize_net,
)
from .netverify import (
    check_shapes,
    count_box,
    enumerate_shapes,
    project,
    rebase_compress,
    rebase_expand,
    u_star,
    verify_net,
    verify_sequence_prefix,
)
from .oa import lump_signature, max_strength, net_to_moa, verify_moa
from .ooa import (
    canonical_beta,
    enumerate_profiles,
    mooa_to_net,
    net_to_mooa,
    verify_mooa,
)

__version__ = "0.1.0"

__all__ = [
    "EVector", "PointSet", "MixedOA", "MixedOOA", "Verdict",
    "ParamError", "PrecisionError", "FormatError", "VerificationError",
    "NetFile", "parse_net", "serialize_net", "parse_moa", "serialize_moa",
    "parse_mooa", "serialize_mooa", "parse_function_tuples",
    "enumerate_shapes", "check_shapes", "count_box", "verify_net", "u_star",
    "verify_sequence_prefix", "project", "rebase_compress", "rebase_expand",
    "net_to_moa", "lump_signature", "verify_moa", "max_strength",
    "canonical_beta", "net_to_mooa", "enumerate_profiles", "verify_mooa",
    "mooa_to_net",
    "Signature", "Condition", "FeasibilityReport", "rao_rhs", "rao_feasible",
    "net_rao_check", "seq_kr_check", "seq_lcm_check", "feasibility_report",
    "FunctionTuple", "profile", "height", "diff", "char_vector",
    "gram_certificate", "build_block_family",
    "grid_1d", "hammersley", "faure", "digital_net", "random_pointset",
    "flip_digit", "SearchResult", "search_net",
]
