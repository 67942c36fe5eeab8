"""Ring spec strings and element literals.

Ring specs: "Z", "GF(p)[x]", "Z[i]", "Z_(p)", "Z[1/2,3]", "Z[x]".
Element literals: "-12", "x^3+2x+1", "1-2i", "50/3".

Every literal produced by ``format_element`` parses back to an equal Element.
"""
import logging
import re
from typing import List, Tuple

from app.core.errors import LiteralParseError

from .rings_schema import Element, RingId, RingKind

logger = logging.getLogger(__name__)

_GF_RE = re.compile(r"^(?:GF|F)\((\d+)\)\[x\]$")
_LOCAL_RE = re.compile(r"^Z_\((\d+)\)$")
_S_INVERTED_RE = re.compile(r"^Z\[1/(\d+(?:,\d+)*)\]$")
_TERM_RE = re.compile(r"^(\d*)\*?(x(?:\^(\d+))?)?$")


def parse_ring_spec(text: str) -> RingId:
    spec = (text or "").replace(" ", "")
    if spec in ("Z", "ZZ"):
        return RingId(RingKind.INT)
    if spec == "Z[i]":
        return RingId(RingKind.GAUSSIAN)
    if spec == "Z[x]":
        return RingId(RingKind.INT_POLY)

    match = _GF_RE.match(spec)
    if match:
        return RingId(RingKind.POLY_FP, p=int(match.group(1)))
    match = _LOCAL_RE.match(spec)
    if match:
        return RingId(RingKind.P_LOCAL, p=int(match.group(1)))
    match = _S_INVERTED_RE.match(spec)
    if match:
        return RingId(RingKind.S_INVERTED, primes=tuple(int(q) for q in match.group(1).split(",")))

    logger.warning(f"Unrecognized ring spec {text!r}")
    raise LiteralParseError(f"unrecognized ring spec {text!r}")


# ---------------------------------------------------------------------------
# Polynomials (shared by GF(p)[x] and Z[x]); coefficients low -> high
# ---------------------------------------------------------------------------

def parse_polynomial(text: str) -> Tuple[int, ...]:
    body = text.replace(" ", "")
    if not body:
        raise LiteralParseError("empty polynomial literal")
    terms = re.findall(r"[+-]?[^+-]+", body)
    if "".join(terms) != body:
        raise LiteralParseError(f"malformed polynomial literal {text!r}")

    coeffs: dict = {}
    for term in terms:
        sign = -1 if term.startswith("-") else 1
        match = _TERM_RE.match(term.lstrip("+-"))
        if not match or (not match.group(1) and not match.group(2)):
            raise LiteralParseError(f"malformed polynomial term {term!r} in {text!r}")
        digits, variable, exponent = match.groups()
        coefficient = int(digits) if digits else 1
        degree = 0 if not variable else (int(exponent) if exponent else 1)
        coeffs[degree] = coeffs.get(degree, 0) + sign * coefficient

    top = max(coeffs)
    dense = [coeffs.get(d, 0) for d in range(top + 1)]
    while dense and dense[-1] == 0:
        dense.pop()
    return tuple(dense)


def format_polynomial(coeffs: Tuple[int, ...]) -> str:
    if not coeffs:
        return "0"
    parts: List[str] = []
    for degree in range(len(coeffs) - 1, -1, -1):
        c = coeffs[degree]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if degree == 0:
            body = str(magnitude)
        else:
            monomial = "x" if degree == 1 else f"x^{degree}"
            body = monomial if magnitude == 1 else f"{magnitude}{monomial}"
        parts.append(f"{sign}{body}")
    text = "".join(parts)
    return text[1:] if text.startswith("+") else text


# ---------------------------------------------------------------------------
# Gaussian integers
# ---------------------------------------------------------------------------

def parse_gaussian(text: str) -> Tuple[int, int]:
    body = text.replace(" ", "")
    if not body:
        raise LiteralParseError("empty Gaussian literal")
    try:
        if not body.endswith("i"):
            return int(body), 0
        head = body[:-1]
        split = max(head.rfind("+"), head.rfind("-"))
        real_part, imag_part = (head[:split], head[split:]) if split > 0 else ("", head)
        if imag_part in ("", "+"):
            imag = 1
        elif imag_part == "-":
            imag = -1
        else:
            imag = int(imag_part)
        return (int(real_part) if real_part else 0), imag
    except ValueError as exc:
        raise LiteralParseError(f"malformed Gaussian literal {text!r}") from exc


def format_gaussian(value: Tuple[int, int]) -> str:
    a, b = value
    if b == 0:
        return str(a)
    if b == 1:
        imag = "i"
    elif b == -1:
        imag = "-i"
    else:
        imag = f"{b}i"
    if a == 0:
        return imag
    return f"{a}{imag}" if imag.startswith("-") else f"{a}+{imag}"


# ---------------------------------------------------------------------------
# Fractions
# ---------------------------------------------------------------------------

def parse_fraction(text: str) -> Tuple[int, int]:
    body = text.replace(" ", "")
    try:
        if "/" in body:
            num, den = body.split("/", 1)
            return int(num), int(den)
        return int(body), 1
    except ValueError as exc:
        raise LiteralParseError(f"malformed fraction literal {text!r}") from exc


def format_fraction(value: Tuple[int, int]) -> str:
    num, den = value
    return str(num) if den == 1 else f"{num}/{den}"


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

def parse_element(ring_id: RingId, text: str) -> Element:
    """Parse a literal and normalize it into ``ring_id`` (validating membership)."""
    from .rings import element

    kind = ring_id.kind
    try:
        if kind == RingKind.INT:
            raw = int(text.replace(" ", ""))
        elif kind in (RingKind.POLY_FP, RingKind.INT_POLY):
            raw = parse_polynomial(text)
        elif kind == RingKind.GAUSSIAN:
            raw = parse_gaussian(text)
        else:
            raw = parse_fraction(text)
    except ValueError as exc:
        raise LiteralParseError(f"malformed literal {text!r} for {ring_id}") from exc
    return element(ring_id, raw)


def format_element(x: Element) -> str:
    kind = x.ring.kind
    if kind == RingKind.INT:
        return str(x.value)
    if kind in (RingKind.POLY_FP, RingKind.INT_POLY):
        return format_polynomial(x.value)
    if kind == RingKind.GAUSSIAN:
        return format_gaussian(x.value)
    return format_fraction(x.value)
