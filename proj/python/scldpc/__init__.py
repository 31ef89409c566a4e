"""Construction, lifting and BER simulation of 4-cycle free spatially
coupled LDPC codes built from good sequences."""

from scldpc._core import (  # noqa: F401
    APMSpec,
    BerRecord,
    BinaryMatrix,
    BlockStructure,
    CoupledCode,
    DecodeResult,
    DecoderKind,
    ExponentMatrix,
    GirthResult,
    GoodSequence,
    IndexSet,
    LiftedCode,
    Rational,
    SimConfig,
    WindowDecodeResult,
    apm_matrix,
    awgn_llr,
    ber_csv,
    ber_sweep,
    bp_flooding,
    build_coupled_code,
    constraint_length,
    cpm_lift,
    design_rate,
    design_rate_limit,
    export_alist,
    find_min_moe,
    generate_good_sequence,
    girth,
    h_is_four_cycle_free,
    has_four_cycle,
    import_alist,
    incidence_matrix,
    is_four_cycle_free,
    is_good_sequence,
    karimi_matrix,
    lift,
    matrix_from_sequence,
    moe,
    parse_matrix_text,
    prime_after,
    qc_exponent_girth6,
    random_apm_assignment,
    rep_index_matrix,
    representative_block,
    sliding_window_decode,
    soe,
    terminated_pcm,
    to_text,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
