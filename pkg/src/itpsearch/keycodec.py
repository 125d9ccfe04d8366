"""Order-preserving text keys: letters to a base-27 fraction in [0, 1).

Keys are normalized to bare lowercase letters (case folded, everything else
dropped), then read as base-27 digits with 'a'..'z' mapping to 1..26 and the
empty string to 0.  Lexicographic order of normalized keys matches numeric
order of the encodings as long as the keys differ within the first
``MAX_DIGITS`` letters; beyond that the encodings collide and the keys are
treated as equal.
"""

from __future__ import annotations

import sys

__all__ = ["MAX_DIGITS", "normalize", "encode_base27"]


def _max_digits() -> int:
    # Deepest digit whose weight 27**-d still exceeds one double ulp at 1.0;
    # deeper digits could not change the encoded value reliably.
    d = 0
    while 27.0 ** -(d + 1) > sys.float_info.epsilon:
        d += 1
    return d


MAX_DIGITS = _max_digits()

_DENOM = 27**MAX_DIGITS


def normalize(text: str) -> str:
    """Case-fold and keep only a..z; punctuation, digits, spaces all drop."""
    return "".join(c for c in text.lower() if "a" <= c <= "z")


def encode_base27(text: str) -> float:
    """Encode a key as sum of digit_i * 27**-(i+1) over its first
    MAX_DIGITS normalized letters.

    The digit sum is accumulated in exact integer arithmetic and divided
    once, so equal-prefix keys encode bit-identically.
    """
    digits = normalize(text)[:MAX_DIGITS]
    num = 0
    for c in digits:
        num = num * 27 + (ord(c) - 96)
    num *= 27 ** (MAX_DIGITS - len(digits))
    return num / _DENOM
