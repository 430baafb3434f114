"""Finite words, alphabet orders, lexicographic comparison and extremal factors.

Words are plain lowercase strings ("baabac"); the empty string is the empty
word. An order is a permutation of the letters in play, written smallest
first: Order("bac") means b < a < c.
"""

from dataclasses import dataclass
from itertools import permutations

MAX_ALPHABET = 8

LESS, EQUAL, GREATER = -1, 0, 1


class EpiwordError(Exception):
    pass


class InputError(EpiwordError, ValueError):
    """Malformed word, order or out-of-range argument."""


class InsufficientDirectiveError(EpiwordError):
    """A finite directive word ran out before the requested length."""


class InconclusiveError(EpiwordError):
    """A prefix-scale check did not stabilize within its letter budget."""


def validate_word(w: str) -> str:
    if not all("a" <= c <= "z" for c in w):
        raise InputError(f"word must be lowercase a-z letters, got {w!r}")
    return w


def alph(w: str) -> set[str]:
    """The set of distinct letters occurring in w."""
    return set(w)


@dataclass(frozen=True)
class Order:
    """A total order on a small alphabet, letters listed smallest first."""

    letters: str

    def __post_init__(self):
        validate_word(self.letters)
        if len(set(self.letters)) != len(self.letters):
            raise InputError(f"order letters must be distinct: {self.letters!r}")
        if len(self.letters) > MAX_ALPHABET:
            raise InputError(f"alphabet larger than {MAX_ALPHABET}: {self.letters!r}")

    @property
    def min_letter(self) -> str:
        return self.letters[0]

    def rank(self, letter: str) -> int:
        i = self.letters.find(letter)
        if i < 0:
            raise InputError(f"letter {letter!r} outside alphabet {self.letters!r}")
        return i

    def key(self, w: str):
        """Rank tuple for sorting equal-length words."""
        return tuple(self.rank(c) for c in w)


def alphabetical(w: str) -> Order:
    """Default order: the word's letters in a-z order."""
    return Order("".join(sorted(alph(w))))


def all_orders(letters) -> list[Order]:
    """Every order on the given letter set (|A|! of them, A capped at 8)."""
    letters = sorted(set(letters))
    if len(letters) > MAX_ALPHABET:
        raise InputError(f"alphabet larger than {MAX_ALPHABET}: {letters}")
    return [Order("".join(p)) for p in permutations(letters)]


def lex_compare(u: str, v: str, order: Order) -> int:
    """Compare u and v lexicographically; a proper prefix compares less.

    Returns LESS (-1), EQUAL (0) or GREATER (1).
    """
    stray = (set(u) | set(v)) - set(order.letters)
    if stray:
        raise InputError(f"letters {sorted(stray)} outside alphabet {order.letters!r}")
    for cu, cv in zip(u, v):
        ru, rv = order.rank(cu), order.rank(cv)
        if ru != rv:
            return LESS if ru < rv else GREATER
    if len(u) == len(v):
        return EQUAL
    return LESS if len(u) < len(v) else GREATER


def lex_le(u: str, v: str, order: Order) -> bool:
    return lex_compare(u, v, order) != GREATER


def factors(w: str, n: int) -> set[str]:
    """All distinct length-n windows of w."""
    if not 1 <= n <= len(w):
        raise InputError(f"factor length {n} out of range for |w|={len(w)}")
    return {w[i : i + n] for i in range(len(w) - n + 1)}


@dataclass
class FactorSet:
    """Factor sets of one word, indexed by length."""

    by_length: dict[int, set[str]]

    @classmethod
    def of(cls, w: str, max_n: int | None = None) -> "FactorSet":
        max_n = len(w) if max_n is None else max_n
        if max_n > len(w):
            raise InputError(f"max_n {max_n} exceeds |w|={len(w)}")
        return cls({n: factors(w, n) for n in range(1, max_n + 1)})


def factor_complexity(w: str, max_n: int) -> list[int]:
    """Distinct-factor counts of w for lengths 1..max_n."""
    return [len(factors(w, n)) for n in range(1, max_n + 1)]


def reversal(w: str) -> str:
    return w[::-1]


def is_palindrome(w: str) -> bool:
    return w == w[::-1]


def min_factor(w: str, k: int, order: Order) -> str:
    """The lexicographically smallest factor of w of length k."""
    if not 1 <= k <= len(w):
        raise InputError(f"k={k} out of range for |w|={len(w)}")
    return min(factors(w, k), key=order.key)


def max_factor(w: str, k: int, order: Order) -> str:
    """The lexicographically greatest factor of w of length k."""
    if not 1 <= k <= len(w):
        raise InputError(f"k={k} out of range for |w|={len(w)}")
    return max(factors(w, k), key=order.key)


def _extremal_of(w: str, order: Order, greatest: bool) -> str:
    # Track the set P of start positions of the current extremal factor of
    # length k. The extremal factor of length k+1 extends it as long as some
    # position in P still has a letter to its right; the chain stops exactly
    # when P has shrunk to the suffix occurrence, which is then unioccurrent.
    if not w:
        raise InputError("empty word has no extremal factor")
    ranks = [order.rank(c) for c in w]
    n = len(w)
    pick = max(ranks) if greatest else min(ranks)
    positions = [i for i, r in enumerate(ranks) if r == pick]
    k = 1
    while True:
        extendable = [p for p in positions if p + k < n]
        if not extendable:
            break
        nxt = [ranks[p + k] for p in extendable]
        pick = max(nxt) if greatest else min(nxt)
        positions = [p for p, r in zip(extendable, nxt) if r == pick]
        k += 1
    start = positions[0]
    return w[start : start + k]


def min_of(w: str, order: Order) -> str:
    """min(w): the longest factor m such that every min(w|j), j <= |m|, is a
    prefix of m.  Always a suffix of w, occurring exactly once."""
    return _extremal_of(w, order, greatest=False)


def max_of(w: str, order: Order) -> str:
    """max(w), dual to min_of."""
    return _extremal_of(w, order, greatest=True)
