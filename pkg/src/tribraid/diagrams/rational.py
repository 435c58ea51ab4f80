"""
Rewriting of standard rational diagrams D(a1, ..., am).

A zero entry is an empty box, so its two neighbours merge:
D(..., a, 0, b, ...) = D(..., a + b, ...). Zeros at either end stay.
"""

import logging

from tribraid.core.errors import DiagramError, PreconditionError
from tribraid.core.types import Bookkeeping, RationalCode
from tribraid.diagrams.builder import from_rational_code
from tribraid.diagrams.diagram import component_count, linking_number, reverse_components

logger = logging.getLogger(__name__)


def parse_code(text: str) -> RationalCode:
    """Comma-separated integers, e.g. `2,-1,1`."""
    try:
        entries = tuple(int(a) for a in text.replace(" ", "").split(",") if a)
    except ValueError as e:
        raise PreconditionError(f"malformed rational code '{text}'") from e
    return RationalCode(entries=entries)


def normalize_zeros(code: RationalCode) -> RationalCode:
    out: list[int] = []
    for a in code.entries:
        # a zero on top of the stack is interior once something follows it
        if len(out) >= 2 and out[-1] == 0:
            out.pop()
            a += out.pop()
        out.append(a)
    return RationalCode(entries=tuple(out))


def _u_raw(entries: tuple[int, ...]) -> tuple[int, ...]:
    if len(entries) < 2 or entries[0] < 1 or entries[1] < 1:
        raise PreconditionError(f"U needs m > 1 and a1, a2 >= 1, got {list(entries)}")
    a1, a2, *rest = entries
    return (a1 - 1, -1, a2 - 1, *rest)


def _t_raw(entries: tuple[int, ...], i: int) -> tuple[int, ...]:
    m = len(entries)
    if m <= 3 or not 2 <= i <= m - 2:
        raise PreconditionError(f"T_{i} needs m > 3 and 2 <= i <= m-2, got m={m}")
    a = (0, *entries)  # 1-based
    if a[i] != -1 or min(a[i - 1], a[i + 1], a[i + 2]) < 1:
        raise PreconditionError(
            f"T_{i} needs a_{i} = -1 and its three neighbours >= 1, got {list(entries)}"
        )
    return (*a[1 : i - 1], a[i - 1] + 1, a[i + 1], -1, a[i + 2] - 1, *a[i + 3 :])


def u_transform(code: RationalCode) -> RationalCode:
    """D(a1, a2, ...) -> D(a1-1, -1, a2-1, a3, ...)."""
    return normalize_zeros(RationalCode(entries=_u_raw(code.entries)))


def t_transform(code: RationalCode, i: int) -> RationalCode:
    """
    D(..., a_(i-1), -1, a_(i+1), a_(i+2), ...)
    -> D(..., a_(i-1)+1, a_(i+1), -1, a_(i+2)-1, ...), i is 1-based.
    """
    return normalize_zeros(RationalCode(entries=_t_raw(code.entries, i)))


def alternating_closed_form(code: RationalCode) -> RationalCode:
    """(a1-1, -1, a2-2, -1, ..., a_(m-1)-2, -1, a_m-1) before zero collapse."""
    a = code.entries
    middle: list[int] = []
    for x in a[1:-1]:
        middle.extend((-1, x - 2))
    return RationalCode(entries=(a[0] - 1, *middle, -1, a[-1] - 1))


def alternating_code(code: RationalCode) -> tuple[RationalCode, Bookkeeping]:
    """
    Equivalent alternating code built by the U/T sequence
    D_i = (T_i o ... o T_2 o U)(D_(i+1)), D' = U(D_2), checked against the closed form.
    """
    m = len(code.entries)
    if m < 2 or min(code.entries) < 2:
        raise PreconditionError(f"needs m > 1 and every entry >= 2, got {code.render()}")

    # Steps run on uncollapsed codes so the T indices stay aligned
    current = code.entries
    for i in range(m - 1, 1, -1):
        current = _u_raw(current)
        for j in range(2, i + 1):
            current = _t_raw(current, j)
    current = _u_raw(current)

    expected = alternating_closed_form(code)
    if current != expected.entries:
        raise AssertionError(
            f"U/T sequence gave {list(current)}, closed form is {list(expected.entries)}"
        )

    result = normalize_zeros(expected)
    logger.debug(f"alternating form of {code.render()}: {result.render()}")
    return result, Bookkeeping(delta_p=0, delta_n=-(m - 1), delta_w=m - 1)


def is_alternating(code: RationalCode) -> bool:
    if 0 in code.entries:
        raise PreconditionError(f"zero entry in {code.render()}; normalize first")
    a = code.entries
    return all(x * y < 0 for x, y in zip(a, a[1:], strict=False))


def measure_bookkeeping(before: RationalCode, after: RationalCode) -> Bookkeeping:
    """
    Crossing-sign census difference between the two constructed diagrams.
    For two-component links the second diagram is reoriented so that both
    have the same linking number.
    """
    d = from_rational_code(before)
    d_prime = from_rational_code(after)
    components = component_count(d)
    if components != component_count(d_prime):
        raise DiagramError(f"{before.render()} and {after.render()} differ in component count")
    if components > 2:
        raise PreconditionError("rational diagrams have at most two components")
    if components == 2 and linking_number(d, 0, 1) == -linking_number(d_prime, 0, 1) != 0:
        d_prime = reverse_components(d_prime, {1})

    dp = d_prime.positive_count - d.positive_count
    dn = d_prime.negative_count - d.negative_count
    return Bookkeeping(delta_p=dp, delta_n=dn, delta_w=dp - dn)
