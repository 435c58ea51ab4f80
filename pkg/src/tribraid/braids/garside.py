"""
Left normal forms of 3-braids.

A normal form is Delta^p s_a^k1 s_b^k2 ... s_c^km with alternating generators,
k1, km >= 1 and interior exponents >= 2. The automaton below multiplies by a
single generator in constant time, which makes normal_form linear in the word
length; conjugate_to_lambda walks the conjugacy class down to one of five
summit families, each step removing three letters.
"""

import logging
import re
from collections import deque

from tribraid.braids.word import DELTA_LETTERS, concat, inverse
from tribraid.core.errors import ConjugationError, NotPositiveError, StrandCountError
from tribraid.core.types import (
    BraidWord,
    FamilyKind,
    FamilyTag,
    LambdaClass,
    LambdaFamily,
    NMember,
    NormalForm3,
    SimpleFactor,
)

logger = logging.getLogger(__name__)

_NF_TEXT = re.compile(r"\(\s*(-?\d+)\s*;\s*([\d,\s]*)\s*;\s*(?:first=([12]))?\s*\)")


class NormalFormAutomaton:
    """
    Mutable accumulator for (p, a, [k1..km]).
    The exponent mass n = sum(k) is maintained incrementally so every push is O(1).
    """

    __slots__ = ("p", "first_gen", "exponents", "mass")

    def __init__(self, nf: NormalForm3 | None = None) -> None:
        self.p = nf.p if nf else 0
        self.first_gen = nf.first_gen if nf else 0
        self.exponents: list[int] = list(nf.exponents) if nf else []
        self.mass = sum(self.exponents)

    @property
    def last_gen(self) -> int:
        m = len(self.exponents)
        if m == 0:
            return 0
        return self.first_gen if m % 2 == 1 else 3 - self.first_gen

    def push(self, i: int) -> None:
        ks = self.exponents

        # 1. Nothing after the Delta power
        if not ks:
            self.first_gen = i
            ks.append(1)
            self.mass = 1
            return

        # 2. Same generator as the last run
        if i == self.last_gen:
            ks[-1] += 1
            self.mass += 1
            return

        # 3. Last run has length > 1: a new run starts
        if ks[-1] > 1:
            ks.append(1)
            self.mass += 1
            return

        # 4. s_a s_b -> one factor s_a s_b
        if self.mass == 1:
            ks.append(1)
            self.mass = 2
            return

        # 5. s_a s_b s_a = Delta
        if self.mass == 2:
            self.p += 1
            ks.clear()
            self.first_gen = 0
            self.mass = 0
            return

        # 6. ... s_c^k s_b s_c = ... s_c^(k-1) Delta; Delta slides left and flips
        ks.pop()
        ks[-1] -= 1
        self.p += 1
        self.first_gen = 3 - self.first_gen
        # the pushed letter and two stored ones became the Delta
        self.mass -= 2

    def freeze(self) -> NormalForm3:
        return NormalForm3(p=self.p, first_gen=self.first_gen, exponents=tuple(self.exponents))


def push_generator(nf: NormalForm3, i: int) -> NormalForm3:
    """Normal form of nf * s_i."""
    if i not in (1, 2):
        raise StrandCountError(f"3-braids only have generators 1 and 2, got {i}")
    automaton = NormalFormAutomaton(nf)
    automaton.push(i)
    return automaton.freeze()


def normal_form(w: BraidWord) -> NormalForm3:
    """
    Left normal form in O(len(w)).
    Each s1^-1 becomes Delta^-1 s1 s2 and each s2^-1 becomes Delta^-1 s2 s1; every
    Delta^-1 slides to the front, flipping s1 <-> s2 on the letters it passes.
    """
    if w.strands != 3:
        raise StrandCountError(f"normal forms are implemented for 3 strands, got {w.strands}")

    inverses_after = sum(1 for x in w.letters if x < 0)
    automaton = NormalFormAutomaton()
    automaton.p = -inverses_after

    for x in w.letters:
        if x < 0:
            inverses_after -= 1
            flip = inverses_after & 1
            first = -x
            second = 3 - first
            if flip:
                first, second = second, first
            automaton.push(first)
            automaton.push(second)
        else:
            automaton.push(3 - x if inverses_after & 1 else x)

    return automaton.freeze()


def inf_sup(nf: NormalForm3) -> tuple[int, int]:
    m = len(nf.exponents)
    canonical_length = 0 if m == 0 else nf.mass - (m - 1)
    return nf.p, nf.p + canonical_length


def simple_factors(nf: NormalForm3) -> list[SimpleFactor]:
    """
    The non-Delta simple factors; run r contributes its single letters and,
    unless it is the last run, the two-letter factor joining it to run r+1.
    """
    factors: list[SimpleFactor] = []
    m = len(nf.exponents)
    gen = nf.first_gen
    for r, k in enumerate(nf.exponents):
        singles = k - (1 if r > 0 else 0) - (1 if r < m - 1 else 0)
        factors.extend([SimpleFactor.S1 if gen == 1 else SimpleFactor.S2] * singles)
        if r < m - 1:
            factors.append(SimpleFactor.S1S2 if gen == 1 else SimpleFactor.S2S1)
        gen = 3 - gen
    return factors


def render_factorization(nf: NormalForm3) -> str:
    """Dotted rendering, e.g. `D^1 . s1 . s1s2 . s2`."""
    parts = [f"{SimpleFactor.DELTA.value}^{nf.p}"] if nf.p else []
    parts.extend(f.value for f in simple_factors(nf))
    return " . ".join(parts) if parts else "1"


def render_normal_form(nf: NormalForm3) -> str:
    """`(p; k1,...,km; first=a)`, or `(p; ; )` when the exponent list is empty."""
    if not nf.exponents:
        return f"({nf.p}; ; )"
    ks = ",".join(str(k) for k in nf.exponents)
    return f"({nf.p}; {ks}; first={nf.first_gen})"


def parse_normal_form(text: str) -> NormalForm3:
    match = _NF_TEXT.fullmatch(text.strip())
    if not match:
        raise ValueError(f"not a normal-form record: '{text}'")
    ks = tuple(int(k) for k in match.group(2).replace(" ", "").split(",") if k)
    first = int(match.group(3)) if match.group(3) else 0
    return NormalForm3(p=int(match.group(1)), first_gen=first, exponents=ks)


def normal_form_word(nf: NormalForm3) -> BraidWord:
    """The word Delta^p s_a^k1 s_b^k2 ..., Delta expanded."""
    letters: list[int] = []
    block = DELTA_LETTERS if nf.p >= 0 else tuple(-x for x in DELTA_LETTERS)
    letters.extend(block * abs(nf.p))
    gen = nf.first_gen
    for k in nf.exponents:
        letters.extend([gen] * k)
        gen = 3 - gen
    return BraidWord.model_construct(strands=3, letters=tuple(letters))


def positive_word(nf: NormalForm3) -> BraidWord:
    if nf.p < 0:
        raise NotPositiveError(nf.p)
    return normal_form_word(nf)


def positive_length(nf: NormalForm3) -> int:
    """Letter count of the positive word of a normal form with p >= 0."""
    return 3 * nf.p + nf.mass


def _conjugate_word_level(
    p: int, first_gen: int, ks: deque[int], conjugator: tuple[int, ...]
) -> NormalForm3:
    # Delta^2 is central: conjugate only Delta^(p mod 2) times the tail
    core = NormalForm3.model_construct(p=p % 2, first_gen=first_gen, exponents=tuple(ks))
    c = BraidWord.model_construct(strands=3, letters=conjugator)
    result = normal_form(concat(inverse(c), normal_form_word(core), c))
    return result.model_copy(update={"p": result.p + p - p % 2})


def conjugate_to_lambda(nf: NormalForm3) -> tuple[LambdaClass, BraidWord]:
    """
    Conjugates into one of the families L1..L5.
    Returns the class and a word c with c^-1 * beta * c equal to the representative.
    """
    p = nf.p
    first = nf.first_gen
    ks: deque[int] = deque(nf.exponents)
    mass = nf.mass
    conjugator: list[int] = []

    def done(family: LambdaFamily) -> tuple[LambdaClass, BraidWord]:
        rep = NormalForm3(p=p, first_gen=first if ks else 0, exponents=tuple(ks))
        return (
            LambdaClass(family=family, representative=rep),
            BraidWord.model_construct(strands=3, letters=tuple(conjugator)),
        )

    while True:
        # Conjugating by Delta swaps s1 and s2, so the first run can be taken as s1
        if first == 2:
            conjugator.extend(DELTA_LETTERS)
            first = 1

        m = len(ks)
        if m == 0:
            return done(LambdaFamily.LAMBDA1)
        if m == 1:
            return done(LambdaFamily.LAMBDA2)
        if mass == 2:
            # exponents (1, 1)
            if p % 2 == 0:
                return done(LambdaFamily.LAMBDA3)
            # s2 Delta^p s1 s2 s2^-1 = Delta^p s1^2 for odd p
            conjugator.append(-2)
            ks = deque([2])
            return done(LambdaFamily.LAMBDA2)

        last = 1 if m % 2 == 1 else 2
        if (m - p) % 2 == 1:
            # Move the last run to the front, where it merges with the first
            km = ks.pop()
            ks[0] += km
            conjugator.extend([-last] * km)
            if p % 2 == 0:
                return done(LambdaFamily.LAMBDA4)
            return done(LambdaFamily.LAMBDA2 if len(ks) == 1 else LambdaFamily.LAMBDA5)

        k1, km = ks[0], ks[-1]
        if k1 > 1 and km > 1:
            return done(LambdaFamily.LAMBDA4 if p % 2 == 0 else LambdaFamily.LAMBDA5)

        if k1 == 1:
            step: tuple[int, ...] = (-last,)
        else:
            step = (-last, -(3 - last))

        before = mass
        if m == 2:
            # k2 is also km here, so the list rewrite below would touch it twice
            reduced = _conjugate_word_level(p, first, ks, step)
            p, first, ks, mass = (
                reduced.p,
                reduced.first_gen,
                deque(reduced.exponents),
                reduced.mass,
            )
        elif k1 == 1:
            # s_b Delta^p s1 s2^k2 ... s_b^km s_b^-1 = Delta^(p+1) s2^(k2-1) ... s_b^(km-1)
            ks.popleft()
            ks[0] -= 1
            ks[-1] -= 1
            if ks[-1] == 0:
                ks.pop()
            p += 1
            first = 2
            mass -= 3
        else:
            # conjugating by the last two letters absorbs them into one more Delta
            ks.pop()
            ks[0] -= 1
            ks[-1] -= 1
            p += 1
            mass -= 3

        conjugator.extend(step)
        if mass != before - 3:
            raise ConjugationError(
                f"conjugation by {step} moved the exponent mass from {before} to {mass}"
            )


def summit_infimum(nf: NormalForm3) -> int:
    lam, _ = conjugate_to_lambda(nf)
    return lam.representative.p


def is_positive_representative(nf: NormalForm3) -> bool:
    """True when the conjugacy class contains a positive braid."""
    return summit_infimum(nf) >= 0


_N_BY_EXPONENTS: dict[tuple[int, ...], NMember] = {
    (): NMember.IDENTITY,
    (1,): NMember.S1,
    (2,): NMember.S1_SQUARED,
    (1, 1): NMember.S1S2,
    (2, 2): NMember.S1SQ_S2SQ,
}


def classify_family(nf: NormalForm3) -> FamilyTag:
    """Family of the closed positive 3-braid, read off the summit representative."""
    lam, _ = conjugate_to_lambda(nf)
    rep = lam.representative
    if rep.p < 0:
        raise NotPositiveError(rep.p)

    if rep.p > 0:
        if rep.p == 1 and not rep.exponents:
            return FamilyTag(kind=FamilyKind.N, member=NMember.DELTA)
        return FamilyTag(kind=FamilyKind.C4A)

    ks = rep.exponents
    if ks in _N_BY_EXPONENTS:
        return FamilyTag(kind=FamilyKind.N, member=_N_BY_EXPONENTS[ks])
    if len(ks) == 1:
        return FamilyTag(kind=FamilyKind.C1, k1=ks[0])
    if len(ks) == 2:
        if min(ks) == 2:
            return FamilyTag(kind=FamilyKind.C2, k1=max(ks))
        return FamilyTag(kind=FamilyKind.C3, k1=ks[0], k2=ks[1])
    return FamilyTag(kind=FamilyKind.C4B)
