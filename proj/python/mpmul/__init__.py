"""Bit-exact model of a run-time reconfigurable multi-precision
floating-point multiplier."""

from mpmul._core import (
    DecodedWord,
    Error,
    ModeConfig,
    ModeId,
    ModeMismatchError,
    ModeResolution,
    MulStats,
    ProductResult,
    ResultClass,
    Rounding,
    Truncated,
    UrdhvaStats,
    __version__,
    auto_select,
    decode_word,
    encode_word,
    karatsuba,
    karatsuba_stats,
    mode_config,
    mode_from_name,
    mode_name,
    multiply,
    resolve_mode,
    significant_width,
    truncate_operand,
    urdhva_mul,
    urdhva_stats,
)

__all__ = [
    "DecodedWord",
    "Error",
    "ModeConfig",
    "ModeId",
    "ModeMismatchError",
    "ModeResolution",
    "MulStats",
    "ProductResult",
    "ResultClass",
    "Rounding",
    "Truncated",
    "UrdhvaStats",
    "__version__",
    "auto_select",
    "decode_word",
    "encode_word",
    "karatsuba",
    "karatsuba_stats",
    "mode_config",
    "mode_from_name",
    "mode_name",
    "multiply",
    "resolve_mode",
    "significant_width",
    "truncate_operand",
    "urdhva_mul",
    "urdhva_stats",
]
