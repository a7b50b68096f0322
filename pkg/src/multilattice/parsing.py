"""Text form of patterns: ``.`` is MERGE and binds tighter, ``*`` is TENSOR.

``"2.1*3"`` parses to blocks ``({1, 2}, {3})``; printing emits each block's
indices ascending, so ``parse(print(p)) == p``.
"""
from __future__ import annotations

import re

from .patterns import Pattern, PatternError, format_pattern

_TOKEN = re.compile(r"(\d+)|([.*])|(\S)")


class PatternSyntaxError(PatternError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokens(text: str):
    for m in _TOKEN.finditer(text):
        if m.group(3) is not None:
            raise PatternSyntaxError(f"unexpected character {m.group(3)!r}", m.start())
        yield m.start(), m.group(0)
    yield len(text), None


def parse_pattern(text: str, k: int | None = None) -> Pattern:
    """Parse a pattern expression over layers ``1..k``.

    When ``k`` is omitted it is taken as the largest index present.
    """
    blocks: list[list[int]] = [[]]
    expect_index = True
    seen: dict[int, int] = {}
    for pos, tok in _tokens(text):
        if expect_index:
            if tok is None or not tok.isdigit():
                what = "end of input" if tok is None else repr(tok)
                raise PatternSyntaxError(f"expected a layer index, found {what}", pos)
            i = int(tok)
            if i in seen:
                raise PatternSyntaxError(f"index {i} repeated (first at {seen[i]})", pos)
            if i < 1 or (k is not None and i > k):
                raise PatternSyntaxError(f"index {i} out of range 1..{k}", pos)
            seen[i] = pos
            blocks[-1].append(i)
            expect_index = False
        elif tok is None:
            break
        elif tok == ".":
            expect_index = True
        elif tok == "*":
            blocks.append([])
            expect_index = True
        else:
            raise PatternSyntaxError(f"expected '.' or '*', found {tok!r}", pos)
    if k is None:
        k = max(seen)
    missing = sorted(set(range(1, k + 1)) - set(seen))
    if missing:
        raise PatternError(f"indices {missing} missing from {text!r}")
    return Pattern(tuple(tuple(sorted(b)) for b in blocks))


def print_pattern(p: Pattern) -> str:
    return format_pattern(p)
