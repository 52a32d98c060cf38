"""Substring search over symbol sequences via the failure function."""

from __future__ import annotations

from typing import Sequence

from .errors import ValidationError


def failure_function(pattern: Sequence) -> list[int]:
    """failure[i] = length of the longest proper border of pattern[:i+1]."""
    fail = [0] * len(pattern)
    k = 0
    for i in range(1, len(pattern)):
        while k > 0 and pattern[i] != pattern[k]:
            k = fail[k - 1]
        if pattern[i] == pattern[k]:
            k += 1
        fail[i] = k
    return fail


def kmp_match(text: Sequence, pattern: Sequence, pos: int = 1) -> int | None:
    """Smallest 1-based index >= pos at which pattern occurs in text.

    Symbols compare with ==. The empty pattern matches at pos. Returns None
    when there is no occurrence. pos must lie in [1, len(text)+1].
    """
    if not 1 <= pos <= len(text) + 1:
        raise ValidationError(f"pos {pos} outside [1, {len(text) + 1}]")
    if not pattern:
        return pos
    if len(pattern) > len(text) - (pos - 1):
        return None
    fail = failure_function(pattern)
    k = 0
    for i in range(pos - 1, len(text)):
        while k > 0 and text[i] != pattern[k]:
            k = fail[k - 1]
        if text[i] == pattern[k]:
            k += 1
        if k == len(pattern):
            return i - len(pattern) + 2
    return None
