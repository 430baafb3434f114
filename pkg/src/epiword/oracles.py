"""Independent brute-force references for validating the deciders.

The membership oracle enumerates directive words outright and generates the
words they direct; the balance oracle filters binary words directly. Sweeps
compare a decider against its oracle over every word up to a length budget.
"""

import time
from dataclasses import dataclass, field
from itertools import product

from .classify import is_balanced, is_finite_episturmian, sturmian_test
from .generate import pal_closure
from .words import InputError, alph, validate_word

_SWEEP_BUDGET = {2: 14, 3: 8}


def oracle_is_finite_episturmian(w: str, directive_bound: int | None = None) -> bool:
    """True iff w occurs in the word generated by some directive over the
    letters of w with length at most directive_bound (default 2|w|).

    Enumeration is exhaustive with iterative deepening. Searching past depth
    |w| cannot change the answer: any embedding de-substitutes, shrinking the
    word at every step, to one of directive length at most |w|.
    """
    validate_word(w)
    if not w:
        raise InputError("empty word")
    bound = 2 * len(w) if directive_bound is None else directive_bound
    if bound < 1:
        raise InputError("directive_bound must be positive")
    letters = sorted(alph(w))
    cap = min(bound, len(w))

    def search(u: str, remaining: int) -> bool:
        for x in letters:
            u2 = pal_closure(u + x)
            if w in u2:
                return True
            if remaining > 1 and search(u2, remaining - 1):
                return True
        return False

    return any(search("", limit) for limit in range(1, cap + 1))


def discovery_table(letters, max_depth: int, max_factor_len: int) -> dict[str, int]:
    """factor -> least directive length whose generated word contains it,
    over all directives on the given letters up to max_depth."""
    letters = sorted(set(letters))
    table: dict[str, int] = {}

    def visit(u: str, parent_len: int, depth: int):
        for end in range(parent_len + 1, len(u) + 1):
            for size in range(1, min(max_factor_len, end) + 1):
                f = u[end - size : end]
                old = table.get(f)
                if old is None or depth < old:
                    table[f] = depth
        if depth < max_depth:
            for x in letters:
                visit(pal_closure(u + x), len(u), depth + 1)

    for x in letters:
        visit(x, 0, 1)
    return table


def enumerate_balanced(n: int) -> set[str]:
    """All balanced binary words of length n, by filtering all 2^n words."""
    if n < 0:
        raise InputError("n must be non-negative")
    if n > 20:
        raise InputError(f"enumeration budget is n <= 20, got {n}")
    return {
        "".join(p) for p in product("ab", repeat=n) if is_balanced("".join(p))
    }


@dataclass
class SweepReport:
    check: str
    alphabet_size: int
    max_len: int
    total_words: int
    mismatches: list = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_json_dict(self, include_timing: bool = False) -> dict:
        out = {
            "check": self.check,
            "alphabet_size": self.alphabet_size,
            "max_len": self.max_len,
            "total_words": self.total_words,
            "passed": self.passed,
            "mismatches": [
                {"word": w, "decider": d, "oracle": o} for w, d, o in self.mismatches
            ],
        }
        if include_timing:
            out["elapsed_seconds"] = self.elapsed_seconds
        return out


def _episturmian_oracle_ternary(max_len: int):
    # One discovery table per word alphabet keeps the per-word contract
    # (directives over Alph(w) only) while sharing the enumeration. A factor
    # counts as found when its first discovery depth is within the per-word
    # cap, matching oracle_is_finite_episturmian with its default bound.
    tables: dict[frozenset, dict[str, int]] = {}

    def verdict(w: str) -> bool:
        key = frozenset(w)
        if key not in tables:
            tables[key] = discovery_table(key, max_len, max_len)
        depth = tables[key].get(w)
        return depth is not None and depth <= len(w)

    return verdict


def sweep(check: str, alphabet_size: int, max_len: int) -> SweepReport:
    """Compare a named decider against its oracle on every word over the
    first alphabet_size letters up to max_len, collecting mismatches."""
    if alphabet_size not in _SWEEP_BUDGET:
        raise InputError("alphabet_size must be 2 or 3")
    if not 1 <= max_len <= _SWEEP_BUDGET[alphabet_size]:
        raise InputError(
            f"max_len budget for alphabet {alphabet_size} is "
            f"{_SWEEP_BUDGET[alphabet_size]}, got {max_len}"
        )
    letters = "abc"[:alphabet_size]

    if check == "episturmian":
        decide = lambda w: is_finite_episturmian(w).accepted
        if alphabet_size == 2:
            reference = is_balanced
        else:
            reference = _episturmian_oracle_ternary(max_len)
    elif check == "sturmian":
        if alphabet_size != 2:
            raise InputError("the sturmian check is binary only")
        # Words missing one letter are trivially balanced and in range of no
        # a/b extremal-factor witness, so they count as Sturmian directly.
        decide = lambda w: len(alph(w)) < 2 or sturmian_test(w).sturmian
        reference = is_balanced
    else:
        raise InputError(f"unknown check {check!r}; expected episturmian or sturmian")

    start = time.perf_counter()
    total = 0
    mismatches = []
    for n in range(1, max_len + 1):
        for tup in product(letters, repeat=n):
            w = "".join(tup)
            total += 1
            d = bool(decide(w))
            o = bool(reference(w))
            if d != o:
                mismatches.append((w, d, o))
    elapsed = time.perf_counter() - start
    return SweepReport(check, alphabet_size, max_len, total, mismatches, elapsed)
