"""Word generators: letter morphisms, palindromic right-closure, directive
words, mechanical words, and non-recurrent (skew-style) constructions.

A directive word drives the iterated palindromic closure u(n+1) = (u(n)·x)^+,
whose nested palindromic prefixes converge to a standard episturmian word.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor

from .words import (
    InputError,
    InsufficientDirectiveError,
    reversal,
    validate_word,
)


def psi(a: str, w: str) -> str:
    """The morphism fixing a and prepending a to every other letter."""
    return "".join(c if c == a else a + c for c in w)


def psi_inverse(a: str, w: str) -> str | None:
    """Invert psi(a, .) by the left-to-right block parse, or None.

    w is in the image exactly when it starts with a and a occurs in every
    length-2 factor; blocks "a·y" (y != a) map to y, lone "a" maps to a.
    """
    out = []
    i, n = 0, len(w)
    while i < n:
        if w[i] != a:
            return None
        if i + 1 < n and w[i + 1] != a:
            out.append(w[i + 1])
            i += 2
        else:
            out.append(a)
            i += 1
    return "".join(out)


def apply_morphism(letters: str, w: str) -> str:
    """Compose psi over letters (leftmost outermost) and apply to w."""
    for x in reversed(letters):
        w = psi(x, w)
    return w


def pal_closure(w: str) -> str:
    """The shortest palindrome having w as a prefix.

    Splits w = u·v at the longest palindromic suffix v and returns u·v·ũ.
    Naive quadratic scan; plenty at desk scale.
    """
    n = len(w)
    for i in range(n):
        lo, hi = i, n - 1
        while lo < hi and w[lo] == w[hi]:
            lo += 1
            hi -= 1
        if lo >= hi:
            return w + w[:i][::-1]
    return w


@dataclass(frozen=True)
class DirectiveSpec:
    """A directive word: finite preperiod followed by a repeated period.

    Text form "PRE*PERIOD": "*ab" repeats ab forever, "c*ab" prepends c,
    "abc" with no star is a finite directive.
    """

    preperiod: str
    period: str = ""

    def __post_init__(self):
        validate_word(self.preperiod)
        validate_word(self.period)

    @classmethod
    def from_text(cls, text: str) -> "DirectiveSpec":
        pre, star, per = text.partition("*")
        if not star:
            return cls(text, "")
        return cls(pre, per)

    def text(self) -> str:
        return f"{self.preperiod}*{self.period}" if self.period else self.preperiod

    def __str__(self) -> str:
        return self.text()

    def letters(self):
        yield from self.preperiod
        while self.period:
            yield from self.period

    @property
    def is_finite(self) -> bool:
        return not self.period

    @property
    def is_strict(self) -> bool:
        """Every letter of the directive recurs forever in it."""
        return bool(self.period) and set(self.preperiod) <= set(self.period)

    def alphabet(self) -> set[str]:
        return set(self.preperiod + self.period)

    def prefix(self, n: int) -> str:
        """Exactly the first n letters of the directed standard word."""
        return standard_prefix(self, n)[:n]


def palindromic_prefixes(d: DirectiveSpec, count: int) -> list[str]:
    """The nested palindromic prefixes u(1)=empty, u(2), ..., u(count)."""
    us = [""]
    it = d.letters()
    while len(us) < count:
        x = next(it, None)
        if x is None:
            raise InsufficientDirectiveError(
                f"directive {d} has only {len(us) - 1} letters, need {count - 1}"
            )
        us.append(pal_closure(us[-1] + x))
    return us


def standard_prefix(d: DirectiveSpec, min_len: int) -> str:
    """The first palindromic prefix of the directed word with length >= min_len.

    Output may overshoot min_len: closure steps are applied whole.
    """
    u = ""
    if len(u) >= min_len:
        return u
    for x in d.letters():
        u = pal_closure(u + x)
        if len(u) >= min_len:
            return u
    raise InsufficientDirectiveError(
        f"directive {d} exhausted at length {len(u)}, need {min_len}"
    )


def h_words(d: DirectiveSpec, n: int) -> list[str]:
    """The prefixes h(i) = mu(i)(x(i+1)) for i = 0..n-1.

    mu(i) composes psi over the first i directive letters; the product
    h(n-2)···h(1)h(0) rebuilds the palindromic prefix u(n).
    """
    xs = []
    it = d.letters()
    for _ in range(n):
        x = next(it, None)
        if x is None:
            raise InsufficientDirectiveError(
                f"directive {d} has fewer than {n} letters"
            )
        xs.append(x)
    hs = []
    for i in range(n):
        word = xs[i]
        for j in range(i - 1, -1, -1):
            word = psi(xs[j], word)
        hs.append(word)
    return hs


@dataclass(frozen=True)
class MechanicalSpec:
    """Rotation-coded binary word with rational slope and intercept."""

    alpha: Fraction
    rho: Fraction
    variant: str = "floor"

    def __post_init__(self):
        if not (0 <= self.alpha <= 1 and 0 <= self.rho <= 1):
            raise InputError("alpha and rho must lie in [0, 1]")
        if self.variant not in ("floor", "ceiling"):
            raise InputError(f"variant must be floor or ceiling: {self.variant!r}")

    @classmethod
    def from_json(cls, obj: dict) -> "MechanicalSpec":
        return cls(
            alpha=Fraction(obj["alpha"]),
            rho=Fraction(obj["rho"]),
            variant=obj.get("variant", "floor"),
        )

    def to_json_dict(self) -> dict:
        return {
            "alpha": str(self.alpha),
            "rho": str(self.rho),
            "variant": self.variant,
        }

    def prefix(self, n: int) -> str:
        return mechanical_prefix(self, n)


def mechanical_prefix(m: MechanicalSpec, n: int) -> str:
    """First n letters: 'a' where the floor (or ceiling) difference is 0."""
    f = floor if m.variant == "floor" else ceil
    out = []
    for i in range(n):
        step = f((i + 1) * m.alpha + m.rho) - f(i * m.alpha + m.rho)
        out.append("a" if step == 0 else "b")
    return "".join(out)


def eventually_periodic_prefix(u: str, v: str, n: int) -> str:
    """First n letters of u followed by v repeated forever."""
    validate_word(u)
    validate_word(v)
    if not v:
        raise InputError("periodic part must be non-empty")
    out = u
    while len(out) < n:
        out += v
    return out[:n]


@dataclass(frozen=True)
class EventuallyPeriodicSpec:
    """Literal ultimately periodic word u·v·v·v··· (the skew-word shape)."""

    preperiod: str
    period: str

    def __post_init__(self):
        validate_word(self.preperiod)
        validate_word(self.period)
        if not self.period:
            raise InputError("periodic part must be non-empty")

    def prefix(self, n: int) -> str:
        return eventually_periodic_prefix(self.preperiod, self.period, n)


@dataclass(frozen=True)
class EpiskewSpec:
    """A non-recurrent word v·mu(s) built from a recurrent core s.

    s is the standard word directed by inner_directive over an alphabet
    avoiding excluded_letter; v is the suffix, selected by suffix_index
    (1 = last letter, full length = whole word), of the mu-image of the
    reversed length-p prefix of s followed by excluded_letter.
    """

    mu: str
    excluded_letter: str
    inner_directive: DirectiveSpec
    p: int
    suffix_index: int

    def __post_init__(self):
        validate_word(self.mu)
        validate_word(self.excluded_letter)
        if len(self.excluded_letter) != 1:
            raise InputError("excluded_letter must be a single letter")
        if self.excluded_letter in self.inner_directive.alphabet():
            raise InputError(
                f"excluded letter {self.excluded_letter!r} occurs in the inner directive"
            )
        if self.inner_directive.is_finite:
            raise InputError("inner directive must have a non-empty period")
        if self.p < 0:
            raise InputError("p must be non-negative")
        if self.suffix_index < 1:
            raise InputError("suffix_index must be positive")

    @property
    def is_strict(self) -> bool:
        return self.inner_directive.is_strict

    @classmethod
    def from_json(cls, obj: dict) -> "EpiskewSpec":
        return cls(
            mu=obj.get("mu", ""),
            excluded_letter=obj["excluded_letter"],
            inner_directive=DirectiveSpec.from_text(obj["inner_directive"]),
            p=int(obj.get("p", 0)),
            suffix_index=int(obj["suffix_index"]),
        )

    def to_json_dict(self) -> dict:
        return {
            "mu": self.mu,
            "excluded_letter": self.excluded_letter,
            "inner_directive": self.inner_directive.text(),
            "p": int(self.p),
            "suffix_index": int(self.suffix_index),
        }

    def head(self) -> str:
        """The chosen non-empty suffix v; always ends with excluded_letter."""
        core = reversal(self.inner_directive.prefix(self.p)) + self.excluded_letter
        image = apply_morphism(self.mu, core)
        if self.suffix_index > len(image):
            raise InputError(
                f"suffix_index {self.suffix_index} exceeds |image| = {len(image)}"
            )
        return image[len(image) - self.suffix_index :]

    def prefix(self, n: int) -> str:
        return episkew_prefix(self, n)


def episkew_prefix(e: EpiskewSpec, n: int) -> str:
    """First n letters of v·mu(s)."""
    v = e.head()
    if n <= len(v):
        return v[:n]
    rest = n - len(v)
    image = apply_morphism(e.mu, e.inner_directive.prefix(rest))
    return v + image[:rest]
