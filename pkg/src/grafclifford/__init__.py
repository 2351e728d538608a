"""Exact Graf–Clifford algebra of differential forms over an orthonormal coframe."""
from .errors import (
    GrafError,
    ParseError,
    SignatureMismatch,
    UnsupportedInput,
    UnsupportedSignature,
    UsageError,
)
from .forms import (
    Form,
    Signature,
    contract,
    grade_part,
    involution,
    reversion,
    signatures_up_to,
    wedge,
)
from .products import (
    ProductKind,
    contracted_graf,
    contracted_wedge,
    graf,
    triangle,
    truncated_graf,
)
from .structure import (
    Mod8Class,
    SplitMembership,
    centrality_check,
    hodge,
    iso_to_gamma_L,
    iso_to_gamma_pm,
    p_element,
    project_pm,
    split_reconstruct,
    truncate,
    volume,
    volume_square,
)
from .oracle import OracleReport, full_sweep, oracle_clifford, oracle_contracted_wedge

__version__ = "0.1.0"
