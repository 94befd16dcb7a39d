"""Non-overlapping q-gram frequencies on grammar-compressed text."""

from ._slpgram import (
    build,
    count_qgrams,
    decompress,
    info,
    oracle_count,
    verify,
)

__all__ = [
    "build",
    "count_qgrams",
    "decompress",
    "info",
    "oracle_count",
    "verify",
]
