"""Words in the free group on generators v_0, v_1, ...

A letter is a nonzero int: c > 0 means v_{c-1}, c < 0 means v_{c-1}^{-1}
(index = abs(c) - 1).  A word is a tuple of letters, kept freely reduced
by all operations here.  Letter order for shortlex purposes is
v_0 < v_0^{-1} < v_1 < v_1^{-1} < ...
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

Letter = int
Word = Tuple[int, ...]

EMPTY: Word = ()


class WordFormatError(ValueError):
    """Malformed word text; carries the offending token position."""

    def __init__(self, message, position):
        super().__init__(f"{message} (token {position})")
        self.position = position


def gen(index: int, sign: int = 1) -> Letter:
    if index < 0 or sign not in (-1, 1):
        raise ValueError(f"bad letter ({index}, {sign})")
    return sign * (index + 1)


def letter_index(c: Letter) -> int:
    return abs(c) - 1


def letter_sign(c: Letter) -> int:
    return 1 if c > 0 else -1


def letter_key(c: Letter) -> int:
    # v_i comes before v_i^{-1}; smaller indices first.
    return 2 * (abs(c) - 1) + (0 if c > 0 else 1)


def word_key(w: Sequence[Letter]):
    """Shortlex sort key: length first, then letterwise order."""
    return (len(w), tuple(letter_key(c) for c in w))


def reduce_word(raw: Iterable[Letter]) -> Word:
    """Freely reduce, cancelling adjacent inverse pairs until none remain."""
    stack = []
    for c in raw:
        if c == 0:
            raise ValueError("0 is not a letter")
        if stack and stack[-1] == -c:
            stack.pop()
        else:
            stack.append(c)
    return tuple(stack)


def invert_word(w: Sequence[Letter]) -> Word:
    return tuple(-c for c in reversed(w))


def concat(w1: Sequence[Letter], w2: Sequence[Letter]) -> Word:
    return reduce_word(tuple(w1) + tuple(w2))


def power(w: Sequence[Letter], k: int) -> Word:
    if k < 0:
        return power(invert_word(w), -k)
    out: Word = EMPTY
    for _ in range(k):
        out = concat(out, w)
    return out


def cyclic_reduce(w: Word) -> Tuple[Word, Word]:
    """Split w = conjugator . core . conjugator^{-1} with core cyclically reduced."""
    lo, hi = 0, len(w)
    while hi - lo >= 2 and w[lo] == -w[hi - 1]:
        lo += 1
        hi -= 1
    return w[lo:hi], w[:lo]


def is_cyclically_reduced(w: Word) -> bool:
    return len(w) < 2 or w[0] != -w[-1]


def cyclic_permutations(w: Word) -> set:
    """All rotations of a cyclically reduced word, deduplicated."""
    if not is_cyclically_reduced(w):
        raise ValueError(f"not cyclically reduced: {format_word(w)}")
    if not w:
        return {EMPTY}
    return {w[i:] + w[:i] for i in range(len(w))}


def parse_word(text: str) -> Word:
    tokens = text.split()
    if not tokens:
        raise WordFormatError("empty word text (use 'e' for the identity)", 0)
    letters = []
    for pos, tok in enumerate(tokens):
        if tok == "e":
            continue
        if len(tok) < 2 or tok[0] not in "gG" or not tok[1:].isdigit():
            raise WordFormatError(f"bad token {tok!r}", pos)
        letters.append(gen(int(tok[1:]), 1 if tok[0] == "g" else -1))
    return reduce_word(letters)


def format_word(w: Sequence[Letter]) -> str:
    if not w:
        return "e"
    return " ".join(
        ("g" if c > 0 else "G") + str(abs(c) - 1) for c in w
    )
