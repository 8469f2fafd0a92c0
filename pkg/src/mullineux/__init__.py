"""Mullineux involution on e-regular partitions, three independent ways,
with the charged-multipartition and multisegment machinery around it."""

from .charges import (
    act_shift,
    act_sigma,
    act_tau,
    act_tau_inv,
    apply_word,
    contains,
    fundamental_representative,
    inverse_word,
    is_fundamental,
    is_very_dominant,
    normalization_word,
    path_word,
    residue_counts,
    same_orbit,
    sharp_very_dominant,
    transpose_charge,
    very_dominant_representative,
)
from .core import (
    concat,
    conjugate,
    enumerate_e_regular,
    enumerate_multipartitions,
    enumerate_partitions,
    first_column_length,
    is_e_regular,
    is_strict_e_core,
    max_hook_length,
    multirank,
    node_residue,
    part,
    rank,
    remove_first_column,
)
from .crystal import (
    blockwise_lift,
    blockwise_lower,
    blockwise_lower_pair,
    enumerate_phi,
    flotw_check,
    membership,
    psi,
    psi_shift_down,
    psi_shift_up,
    psi_sigma,
    psi_tau,
    psi_tau_inv,
)
from .errors import (
    InputError,
    InternalError,
    MalformedSymbolError,
    MullineuxError,
    NoPathError,
    NotAdmissibleError,
)
from .involution import (
    ak_mullineux,
    e_rim,
    good_addable_node,
    good_removable_node,
    im_sharp,
    kleshchev_oracle,
    mullineux_crystal,
    truncated_e_rim,
    xu,
    xu_strip,
)
from .multisegments import (
    canonical,
    chi,
    chi_inverse,
    is_admissible,
    is_aperiodic,
    multisegment_length,
    segment_tail,
)
from .symbols import Symbol, build_symbol, decode_symbol, match_step, symbol_depth
from .theta import theta, theta_inverse, theta_l2

__all__ = [name for name in dir() if not name.startswith("_")]
