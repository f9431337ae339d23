"""Free products with amalgamation over an infinite cyclic subgroup.

G = A *_C B with A, B free and C generated by a fixed non-trivial
cyclically reduced word in each factor (c_A in A, c_B in B).  Elements
carry alternating syllable normal forms; the syllable length of the
reduced form is an invariant of the element, and the cyclically reduced
length is a conjugacy invariant.  An element is conjugate into a factor
exactly when its cyclically reduced form has at most one syllable, the
criterion everything here runs on; a bounded brute-force conjugator
search acts as the independent oracle.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional

from .words import (
    PreconditionError,
    canonical_cyclic,
    cyclic_reduce,
    enumerate_reduced_words,
    format_word,
    inverse,
    inverse_word,
    primitive_root,
    reduce,
)

FACTOR_A = "A"
FACTOR_B = "B"

RAW = "raw"
REDUCED = "reduced"
CYCLICALLY_REDUCED = "cyclically_reduced"


class HypothesisError(PreconditionError):
    """A lemma-checking operation was called with its hypotheses violated."""


@dataclass(frozen=True)
class AmalgamPresentation:
    """Two free factors and the images of the cyclic edge group."""

    rank_a: int
    rank_b: int
    c_a: tuple[int, ...]
    c_b: tuple[int, ...]

    def __post_init__(self):
        for rank, c, name in (
            (self.rank_a, self.c_a, "c_a"),
            (self.rank_b, self.c_b, "c_b"),
        ):
            if rank < 1:
                raise ValueError("factor ranks must be at least 1")
            if not c:
                raise ValueError(f"{name} must be non-trivial")
            if cyclic_reduce(c) != c:
                raise ValueError(f"{name} must be cyclically reduced")
            if any(abs(l) > rank for l in c):
                raise ValueError(f"{name} uses letters beyond its factor rank")

    def amalgam_word(self, factor: str) -> tuple[int, ...]:
        return self.c_a if factor == FACTOR_A else self.c_b

    def other(self, factor: str) -> str:
        return FACTOR_B if factor == FACTOR_A else FACTOR_A


@dataclass(frozen=True)
class FactorElement:
    """A reduced word in one of the free factors."""

    factor: str
    word: tuple[int, ...]

    def __post_init__(self):
        if self.factor not in (FACTOR_A, FACTOR_B):
            raise ValueError("factor must be 'A' or 'B'")
        if reduce(self.word) != self.word:
            raise ValueError("factor element words must be reduced")

    def __str__(self) -> str:
        return f"({self.factor}: {format_word(self.word) or '1'})"


@dataclass(frozen=True)
class AmalgamWord:
    """Alternating syllable spelling of an element of the amalgam.

    The empty syllable sequence is the identity.
    """

    syllables: tuple[tuple[str, tuple[int, ...]], ...]
    status: str = RAW

    def __len__(self) -> int:
        return len(self.syllables)

    def __str__(self) -> str:
        if not self.syllables:
            return "(1)"
        return "".join(f"({tag}: {format_word(w)})" for tag, w in self.syllables)


def word_of(*syllables: FactorElement) -> AmalgamWord:
    return AmalgamWord(tuple((e.factor, e.word) for e in syllables))


def c_power_of(p: AmalgamPresentation, e: FactorElement) -> Optional[int]:
    """k with e = c**k in its factor, if any (0 for the identity)."""
    w = reduce(e.word)
    if not w:
        return 0
    c = p.amalgam_word(e.factor)
    q, r = divmod(len(w), len(c))
    if r:
        return None
    if w == c * q:
        return q
    if w == inverse_word(c) * q:
        return -q
    return None


def _syllable_c_power(p: AmalgamPresentation, tag: str, w: tuple[int, ...]) -> Optional[int]:
    # assumes w already reduced; avoids FactorElement validation in hot loops
    if not w:
        return 0
    c = p.c_a if tag == FACTOR_A else p.c_b
    q, r = divmod(len(w), len(c))
    if r:
        return None
    if w == c * q:
        return q
    if w == inverse_word(c) * q:
        return -q
    return None


def _normalize_syllables(
    p: AmalgamPresentation, syllables: list[tuple[str, tuple[int, ...]]]
) -> list[tuple[str, tuple[int, ...]]]:
    """Merge same-factor neighbours, drop trivial syllables, and push
    powers of the edge generator into the other factor until stable."""
    out = list(syllables)
    changed = True
    while changed:
        changed = False
        merged: list[tuple[str, tuple[int, ...]]] = []
        for tag, w in out:
            w = reduce(w)
            if not w:
                changed = True
                continue
            if merged and merged[-1][0] == tag:
                merged[-1] = (tag, reduce(merged[-1][1] + w))
                changed = True
            else:
                merged.append((tag, w))
        while merged and not merged[-1][1]:
            merged.pop()
            changed = True
        out = [(tag, w) for tag, w in merged if w]
        if len(out) < len(merged):
            changed = True
        if len(out) <= 1:
            break
        for idx, (tag, w) in enumerate(out):
            k = _syllable_c_power(p, tag, w)
            if k is not None:
                other = p.other(tag)
                c_other = p.amalgam_word(other)
                moved = reduce(c_other * k) if k >= 0 else reduce(inverse_word(c_other) * (-k))
                out[idx] = (other, moved)
                changed = True
                break
    return out


def normalize(p: AmalgamPresentation, w: AmalgamWord) -> AmalgamWord:
    """Reduced form: alternating factors, no syllable a power of the edge
    generator unless the whole word is a single syllable or trivial.
    The output's syllable count is an invariant of the element."""
    return AmalgamWord(tuple(_normalize_syllables(p, list(w.syllables))), REDUCED)


def _cyclic_normalize_syllables(
    p: AmalgamPresentation, syllables: list[tuple[str, tuple[int, ...]]]
) -> list[tuple[str, tuple[int, ...]]]:
    out = _normalize_syllables(p, syllables)
    while len(out) >= 2 and out[0][0] == out[-1][0]:
        out = _normalize_syllables(p, [out[-1]] + out[:-1])
    return out


def cyclic_normalize(p: AmalgamPresentation, w: AmalgamWord) -> AmalgamWord:
    """A cyclically reduced conjugate: first and last syllables lie in
    different factors, or the length is at most one.  The output length
    is a conjugacy invariant."""
    return AmalgamWord(
        tuple(_cyclic_normalize_syllables(p, list(w.syllables))), CYCLICALLY_REDUCED
    )


def conjugate_into_factor(p: AmalgamPresentation, w: AmalgamWord) -> Optional[str]:
    """Factor containing a conjugate of w, if any.

    A cyclically reduced word of syllable length two or more is never
    conjugate into a factor; the identity reports factor A.
    """
    cyc = _cyclic_normalize_syllables(p, list(w.syllables))
    if len(cyc) >= 2:
        return None
    if not cyc:
        return FACTOR_A
    return cyc[0][0]


def is_factor_peripheral(p: AmalgamPresentation, e: FactorElement) -> bool:
    """Whether e is conjugate, inside its own free factor, to a power of
    that factor's edge generator (the identity counts)."""
    cyc = canonical_cyclic(e.word)
    if cyc.is_trivial:
        return True
    root_e, mult_e = primitive_root(cyc)
    root_c, mult_c = primitive_root(canonical_cyclic(p.amalgam_word(e.factor)))
    if mult_e % mult_c:
        return False
    return root_e == root_c or root_e == inverse(root_c)


def _conjugated(
    conj: list[tuple[str, tuple[int, ...]]], target: list[tuple[str, tuple[int, ...]]]
) -> list[tuple[str, tuple[int, ...]]]:
    back = [(tag, inverse_word(w)) for tag, w in reversed(conj)]
    return conj + target + back


def check_lemma_statement_1(
    p: AmalgamPresentation, a: FactorElement, h: AmalgamWord, b: FactorElement
) -> bool:
    """With a in A non-peripheral and b in B non-peripheral, the product
    a * (h b h^-1) must not be conjugate into a factor.  Returns whether
    that held; False would falsify the implementation or the model."""
    if a.factor != FACTOR_A or b.factor != FACTOR_B:
        raise HypothesisError("statement 1 needs a in factor A and b in factor B")
    if is_factor_peripheral(p, a):
        raise HypothesisError("a must not be conjugate into the edge subgroup")
    if is_factor_peripheral(p, b):
        raise HypothesisError("b must not be conjugate into the edge subgroup")
    g = _conjugated(list(h.syllables), [(FACTOR_B, b.word)])
    return conjugate_into_factor(p, AmalgamWord(tuple([(FACTOR_A, a.word)] + g))) is None


def check_lemma_statement_2(
    p: AmalgamPresentation, a: FactorElement, h: AmalgamWord, a_prime: FactorElement
) -> bool:
    """With a in A non-peripheral, g = h a' h^-1 conjugate to the
    non-peripheral a' in A: if a*g is conjugate into a factor then g must
    already lie in A.  Returns whether the implication held."""
    if a.factor != FACTOR_A or a_prime.factor != FACTOR_A:
        raise HypothesisError("statement 2 needs a and a' in factor A")
    if is_factor_peripheral(p, a):
        raise HypothesisError("a must not be conjugate into the edge subgroup")
    if is_factor_peripheral(p, a_prime):
        raise HypothesisError("a' must not be conjugate into the edge subgroup")
    g = _conjugated(list(h.syllables), [(FACTOR_A, a_prime.word)])
    if conjugate_into_factor(p, AmalgamWord(tuple([(FACTOR_A, a.word)] + g))) is None:
        return True
    g_reduced = _normalize_syllables(p, g)
    return len(g_reduced) == 0 or (len(g_reduced) == 1 and g_reduced[0][0] == FACTOR_A)


def brute_force_conjugate_into_factor(
    p: AmalgamPresentation,
    w: AmalgamWord,
    max_syllables: int = 2,
    max_letters: int = 2,
) -> Optional[str]:
    """Independent oracle: search conjugators q with at most the given
    syllable count, each syllable a reduced factor word of at most the
    given length, for one making q w q^-1 a single syllable.

    Absence only means absence within the bounds.  Intended for small
    bounds (max_syllables <= 4, max_letters <= 3).
    """
    if max_syllables > 4 or max_letters > 3:
        raise PreconditionError("brute force bounds are capped at 4 syllables, 3 letters")
    base = _normalize_syllables(p, list(w.syllables))
    if len(base) <= 1:
        return FACTOR_A if not base else base[0][0]
    factor_words = {
        tag: [
            word
            for word in enumerate_reduced_words(rank, max_letters)
            if word
        ]
        for tag, rank in ((FACTOR_A, p.rank_a), (FACTOR_B, p.rank_b))
    }
    for count in range(1, max_syllables + 1):
        for start in (FACTOR_A, FACTOR_B):
            tags = [start if k % 2 == 0 else p.other(start) for k in range(count)]
            for choice in itertools.product(*(factor_words[t] for t in tags)):
                conj = list(zip(tags, choice))
                result = _normalize_syllables(p, _conjugated(conj, base))
                if len(result) <= 1:
                    return FACTOR_A if not result else result[0][0]
    return None


@dataclass(frozen=True)
class LemmaSweepReport:
    """Exhaustive Lemma check over bounded instances."""

    passed: bool
    instances_1: int
    instances_2: int
    case_counts: dict[str, int]
    oracle_checked: int
    oracle_agreed: bool
    failure: Optional[str] = None


def _h_shape(syllables: tuple[tuple[str, tuple[int, ...]], ...]) -> str:
    if not syllables:
        return "empty"
    tags = [tag for tag, _ in syllables]
    return f"{tags[0]}..{tags[-1]}" if len(tags) > 1 else f"single {tags[0]}"


def enumerate_h_words(
    p: AmalgamPresentation, max_letters: int, max_syllables: int
) -> list[AmalgamWord]:
    """Reduced-form conjugating words: alternating syllables, none a
    power of the edge generator (single-syllable h may be anything)."""
    words = {
        tag: [w for w in enumerate_reduced_words(rank, max_letters) if w]
        for tag, rank in ((FACTOR_A, p.rank_a), (FACTOR_B, p.rank_b))
    }
    non_c = {
        tag: [w for w in ws if _syllable_c_power(p, tag, w) is None]
        for tag, ws in words.items()
    }
    out = [AmalgamWord((), REDUCED)]
    for tag in (FACTOR_A, FACTOR_B):
        out.extend(AmalgamWord(((tag, w),), REDUCED) for w in words[tag])
    for count in range(2, max_syllables + 1):
        for start in (FACTOR_A, FACTOR_B):
            tags = [start if k % 2 == 0 else p.other(start) for k in range(count)]
            for choice in itertools.product(*(non_c[t] for t in tags)):
                out.append(AmalgamWord(tuple(zip(tags, choice)), REDUCED))
    return out


def lemma_sweep(
    p: AmalgamPresentation,
    max_letters: int = 2,
    max_h_syllables: int = 3,
    oracle_sample: int = 400,
    oracle_seed: int = 0,
) -> LemmaSweepReport:
    """Run both lemma statements over every bounded instance and compare
    conjugate_into_factor with the brute-force oracle on a deduplicated
    selection of the instances' cyclic forms."""
    non_peripheral = {
        tag: [
            FactorElement(tag, w)
            for w in enumerate_reduced_words(rank, max_letters)
            if w and not is_factor_peripheral(p, FactorElement(tag, w))
        ]
        for tag, rank in ((FACTOR_A, p.rank_a), (FACTOR_B, p.rank_b))
    }
    h_words = enumerate_h_words(p, max_letters, max_h_syllables)

    case_counts: dict[str, int] = {}
    instances_1 = instances_2 = 0
    oracle_forms: dict[tuple, AmalgamWord] = {}

    for h in h_words:
        shape = _h_shape(h.syllables)
        h_list = list(h.syllables)
        keep_for_oracle = len(h_list) <= 2
        for b in non_peripheral[FACTOR_B]:
            g = _normalize_syllables(p, _conjugated(h_list, [(FACTOR_B, b.word)]))
            for a in non_peripheral[FACTOR_A]:
                cyc = _cyclic_normalize_syllables(p, [(FACTOR_A, a.word)] + g)
                instances_1 += 1
                case_counts[shape] = case_counts.get(shape, 0) + 1
                if len(cyc) < 2:
                    return LemmaSweepReport(
                        False, instances_1, instances_2, case_counts, 0, True,
                        failure=f"statement 1 failed on a={a}, h={h}, b={b}",
                    )
                if keep_for_oracle:
                    oracle_forms.setdefault(tuple(cyc), AmalgamWord(tuple(cyc)))
        for a_prime in non_peripheral[FACTOR_A]:
            g = _normalize_syllables(p, _conjugated(h_list, [(FACTOR_A, a_prime.word)]))
            g_in_a = len(g) == 0 or (len(g) == 1 and g[0][0] == FACTOR_A)
            for a in non_peripheral[FACTOR_A]:
                cyc = _cyclic_normalize_syllables(p, [(FACTOR_A, a.word)] + g)
                instances_2 += 1
                if len(cyc) < 2 and not g_in_a:
                    return LemmaSweepReport(
                        False, instances_1, instances_2, case_counts, 0, True,
                        failure=f"statement 2 failed on a={a}, h={h}, a'={a_prime}",
                    )
                if keep_for_oracle:
                    oracle_forms.setdefault(tuple(cyc), AmalgamWord(tuple(cyc)))

    rng = random.Random(oracle_seed)
    forms = list(oracle_forms.values())
    if len(forms) > oracle_sample:
        forms = rng.sample(forms, oracle_sample)
    for form in forms:
        quick = conjugate_into_factor(p, form)
        slow = brute_force_conjugate_into_factor(p, form, 2, 2)
        agreed = (quick is None and slow is None) or quick == slow
        if not agreed:
            return LemmaSweepReport(
                False, instances_1, instances_2, case_counts, len(forms), False,
                failure=f"oracle disagreement on {form}: {quick} vs {slow}",
            )
    return LemmaSweepReport(
        True, instances_1, instances_2, case_counts, len(forms), True
    )


__all__ = [
    "AmalgamPresentation",
    "AmalgamWord",
    "CYCLICALLY_REDUCED",
    "FACTOR_A",
    "FACTOR_B",
    "FactorElement",
    "HypothesisError",
    "LemmaSweepReport",
    "RAW",
    "REDUCED",
    "brute_force_conjugate_into_factor",
    "c_power_of",
    "check_lemma_statement_1",
    "check_lemma_statement_2",
    "conjugate_into_factor",
    "cyclic_normalize",
    "enumerate_h_words",
    "is_factor_peripheral",
    "lemma_sweep",
    "normalize",
    "word_of",
]
