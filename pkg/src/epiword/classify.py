"""Deciders: episturmian membership with machine-checkable certificates,
balance and Sturmian tests, and prefix-scale checks for generated words.

The membership decider works by de-substitution: strip a separating letter
with the inverse block parse and recurse, accepting words that are a single
letter off a power of another. Acceptance yields a directive word embedding
the input in a generated standard word, plus a witness prefix u for which
a·u is lexicographically at most min(w) under every order on the alphabet.
"""

import logging
import sys
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .generate import DirectiveSpec, pal_closure, psi_inverse
from .words import (
    MAX_ALPHABET,
    InputError,
    InconclusiveError,
    Order,
    all_orders,
    alph,
    factors,
    lex_le,
    max_of,
    min_of,
    validate_word,
)

log = logging.getLogger(__name__)

STABILITY_BUDGET = 2**16


class RejectReason(str, Enum):
    NO_SEPARATING_LETTER = "NoSeparatingLetter"
    REDUCTION_FAILED = "ReductionFailed"
    WITNESS_CHECK_FAILED = "WitnessCheckFailed"
    NOT_BALANCED = "NotBalanced"


@dataclass(frozen=True)
class Certificate:
    """Evidence for acceptance, checkable without rerunning the decider."""

    reduction_letters: str
    base_word: str
    embedding_directive: DirectiveSpec
    occurrence_index: int
    witness_u: str

    def to_json_dict(self) -> dict:
        return {
            "reduction_letters": self.reduction_letters,
            "base_word": self.base_word,
            "embedding_directive": self.embedding_directive.text(),
            "occurrence_index": self.occurrence_index,
            "witness_u": self.witness_u,
        }


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    certificate: Certificate | None = None
    reason: RejectReason | None = None

    def to_json_dict(self) -> dict:
        return {
            "accepted": self.accepted,
            "reason": self.reason.value if self.reason else None,
            "certificate": self.certificate.to_json_dict() if self.certificate else None,
        }


def separating_letters(w: str, alphabet=None) -> set[str]:
    """Letters occurring in every length-2 factor of w.

    For |w| <= 1 the condition is vacuous and the whole alphabet qualifies
    (defaulting to the letters of w).
    """
    letters = set(alphabet) if alphabet is not None else alph(w)
    if len(w) <= 1:
        return letters
    pairs = factors(w, 2)
    return {a for a in letters if all(a in f for f in pairs)}


def _base_form(w: str):
    """(x, y, p, q) if w = x^p y x^q with at most one letter y differing
    from x (y may be None for powers of a single letter), else None."""
    letters = sorted(set(w))
    if len(letters) == 1:
        return (w[0], None, len(w), 0)
    if len(letters) == 2:
        for y in letters:
            if w.count(y) == 1:
                x = letters[0] if y == letters[1] else letters[1]
                p = w.index(y)
                return (x, y, p, len(w) - p - 1)
    return None


def _reductions(w: str, x: str) -> list[str]:
    # Prepend x when w does not start with it; when the aligned word ends
    # with x, that final letter may be a whole block or the cut-off start of
    # one, so both readings are explored.
    big = w if w[0] == x else x + w
    outs = []
    r = psi_inverse(x, big)
    if r is not None:
        outs.append(r)
    if len(big) > 1 and big.endswith(x):
        r = psi_inverse(x, big[:-1])
        if r:
            outs.append(r)
    return outs


@lru_cache(maxsize=None)
def _accepts(w: str) -> bool:
    if _base_form(w) is not None:
        return True
    seps = separating_letters(w)
    if not seps:
        return False
    outcome = {}
    for x in sorted(seps):
        outcome[x] = any(_accepts(r) for r in _reductions(w, x))
    if len(set(outcome.values())) > 1:
        log.debug("separating-letter branches disagree on %r: %s", w, outcome)
    return any(outcome.values())


def _ensure_recursion_room(n: int):
    need = 8 * n + 200
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def _build_certificate(w: str) -> Certificate:
    chain = []
    cur = w
    while _base_form(cur) is None:
        step = None
        for x in sorted(separating_letters(cur)):
            for r in _reductions(cur, x):
                if _accepts(r):
                    step = (x, r)
                    break
            if step:
                break
        assert step is not None, f"inconsistent acceptance for {cur!r}"
        chain.append(step[0])
        cur = step[1]
    x, y, p, q = _base_form(cur)
    tail = x * p if y is None else x * max(p, q) + y
    directive = DirectiveSpec("".join(chain) + tail, x)
    generated = ""
    for letter in directive.preperiod:
        generated = pal_closure(generated + letter)
    occurrence = generated.find(w)
    assert occurrence >= 0, f"embedding lost {w!r} under directive {directive}"
    return Certificate(
        reduction_letters="".join(chain),
        base_word=cur,
        embedding_directive=directive,
        occurrence_index=occurrence,
        witness_u=generated[: len(w)],
    )


def is_finite_episturmian(w: str) -> Verdict:
    """Decide whether w occurs in some episturmian word.

    Accepts with a certificate: the de-substitution letters, the terminal
    base word, a directive word whose generated standard word contains w,
    and a witness u passing check_witness. Rejections name the first
    obstruction.
    """
    validate_word(w)
    if not w:
        raise InputError("empty word")
    if len(alph(w)) > MAX_ALPHABET:
        raise InputError(f"alphabet larger than {MAX_ALPHABET}")
    _ensure_recursion_room(len(w))
    if not _accepts(w):
        reason = (
            RejectReason.NO_SEPARATING_LETTER
            if not separating_letters(w)
            else RejectReason.REDUCTION_FAILED
        )
        return Verdict(False, None, reason)
    cert = _build_certificate(w)
    if not check_witness(w, cert.witness_u):
        return Verdict(False, None, RejectReason.WITNESS_CHECK_FAILED)
    return Verdict(True, cert, None)


def check_witness(w: str, u: str) -> bool:
    """True iff a·u (cut to |min(w)|) is at most min(w) for every order.

    Orders range over the letters of w and u together; orders whose least
    letter does not occur in w hold vacuously.
    """
    validate_word(w)
    validate_word(u)
    if not w:
        raise InputError("empty word")
    letters = alph(w) | alph(u)
    if len(letters) > MAX_ALPHABET:
        raise InputError(f"alphabet larger than {MAX_ALPHABET}")
    present = alph(w)
    minima = [
        (order, min_of(w, order))
        for order in all_orders(letters)
        if order.min_letter in present
    ]
    longest = max(len(m) for _, m in minima)
    if len(u) < longest - 1:
        raise InputError(
            f"witness too short: |u|={len(u)} < |min(w)|-1 = {longest - 1}"
        )
    return all(
        lex_le(order.min_letter + u[: len(m) - 1], m, order) for order, m in minima
    )


def find_witness(w: str) -> str | None:
    """A witness u validating w, or None when w is not episturmian."""
    verdict = is_finite_episturmian(w)
    return verdict.certificate.witness_u if verdict.accepted else None


def is_balanced(w: str) -> bool:
    """True iff equal-length factors of w never differ by more than one
    occurrence of either letter (binary words only)."""
    validate_word(w)
    if not alph(w) <= {"a", "b"}:
        raise InputError(f"balance is defined over letters a, b: {w!r}")
    for n in range(1, len(w)):
        count = w[:n].count("b")
        lo = hi = count
        for i in range(1, len(w) - n + 1):
            count += (w[i + n - 1] == "b") - (w[i - 1] == "b")
            lo = min(lo, count)
            hi = max(hi, count)
            if hi - lo > 1:
                return False
    return True


@dataclass(frozen=True)
class SturmianResult:
    sturmian: bool
    u: str | None
    common_prefix: str
    after_min: str | None
    after_max: str | None


def sturmian_test(w: str) -> SturmianResult:
    """Sturmian test via extremal factors: w fails exactly when some u has
    a·u·a a prefix of min(w) and b·u·b a prefix of max(w).

    Such a u is unique when it exists; the common-prefix trace of
    a^{-1}min(w) and b^{-1}max(w) is reported either way.
    """
    validate_word(w)
    if alph(w) != {"a", "b"}:
        raise InputError("needs a binary word containing both a and b")
    order = Order("ab")
    mi = min_of(w, order)
    ma = max_of(w, order)
    mt, xt = mi[1:], ma[1:]
    limit = 0
    while limit < len(mt) and limit < len(xt) and mt[limit] == xt[limit]:
        limit += 1
    common = mt[:limit]
    after_min = mt[limit] if limit < len(mt) else None
    after_max = xt[limit] if limit < len(xt) else None
    for k in range(limit + 1):
        if k + 1 < len(mi) and mi[k + 1] == "a" and k + 1 < len(ma) and ma[k + 1] == "b":
            return SturmianResult(False, common[:k], common, after_min, after_max)
    return SturmianResult(True, None, common, after_min, after_max)


@dataclass(frozen=True)
class WideSenseResult:
    ok: bool
    bad_factor: str | None


def wide_sense_check(prefix: str) -> WideSenseResult:
    """True iff every factor of prefix is finite episturmian.

    Factors of episturmian words are episturmian, so testing the prefix
    itself suffices; on failure the shortest (then leftmost) bad factor is
    reported.
    """
    validate_word(prefix)
    if not prefix:
        return WideSenseResult(True, None)
    _ensure_recursion_room(len(prefix))
    if _accepts(prefix):
        return WideSenseResult(True, None)
    for n in range(1, len(prefix) + 1):
        for i in range(len(prefix) - n + 1):
            f = prefix[i : i + n]
            if not _accepts(f):
                return WideSenseResult(False, f)
    raise AssertionError("rejected prefix must contain a rejected factor")


def _stable_minima(source, k: int):
    """Prefix of the generated word plus its per-order length-k minima,
    grown by doubling until both stop changing; raises InconclusiveError
    past the letter budget."""
    if k < 1:
        raise InputError("k must be positive")
    length = max(4 * k, 64)
    prev = None
    while length <= STABILITY_BUDGET:
        prefix = source.prefix(length)
        windows = factors(prefix, k)
        minima = {
            order: min(windows, key=order.key) for order in all_orders(alph(prefix))
        }
        state = tuple(sorted((o.letters, m) for o, m in minima.items()))
        if state == prev:
            return prefix, minima
        prev = state
        length *= 2
    raise InconclusiveError(
        f"length-{k} minima still changing at {STABILITY_BUDGET} letters"
    )


def check_min_inequality(d: DirectiveSpec, k: int) -> bool:
    """Check a·t <= min(t) at cutoff k for the directed standard word t,
    for every order; strict directives must achieve equality.

    The directed word is standard by construction, so its length-k minima
    never drop below a·t cut to k; once every order's minimum over a finite
    prefix reaches that floor, the strict equality is exactly converged.
    Stabilization alone is not trusted for equality: the witnessing factor
    can first occur far beyond where the minima stop moving.
    """
    if k < 1:
        raise InputError("k must be positive")
    strict = d.is_strict
    length = max(4 * k, 64)
    prev = None
    while length <= STABILITY_BUDGET:
        prefix = d.prefix(length)
        windows = factors(prefix, k)
        minima = {
            order: min(windows, key=order.key) for order in all_orders(alph(prefix))
        }
        for order, mk in minima.items():
            if not lex_le(order.min_letter + prefix[: k - 1], mk, order):
                return False
        if strict:
            if all(mk == o.min_letter + prefix[: k - 1] for o, mk in minima.items()):
                return True
        else:
            state = tuple(sorted((o.letters, m) for o, m in minima.items()))
            if state == prev:
                return True
            prev = state
        length *= 2
    raise InconclusiveError(
        f"length-{k} minima not settled within {STABILITY_BUDGET} letters"
    )


def check_fine_prefix(source, k: int) -> bool:
    """True iff min(t | k) = a·s for one shared s across all orders."""
    prefix, minima = _stable_minima(source, k)
    if len(alph(prefix)) < 2:
        raise InputError("fineness needs at least two letters")
    tails = set()
    for order, mk in minima.items():
        if not mk.startswith(order.min_letter):
            return False
        tails.add(mk[1:])
    return len(tails) == 1
