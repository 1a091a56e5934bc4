"""Lossless text formatting and parsing of the values the CLI exchanges.

Complex numbers are written `a+bi` with 17 significant digits so that a
round-trip through text is exact.
"""

from __future__ import annotations

import re

__all__ = ["format_real", "format_complex", "parse_complex"]

_COMPLEX_RE = re.compile(
    r"^\s*(?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)"
    r"(?:(?P<im>[+-](?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i)?\s*$"
)
_PURE_IM_RE = re.compile(r"^\s*(?P<im>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)i\s*$")


def format_real(x: float) -> str:
    return f"{float(x):.17g}"


def format_complex(z: complex) -> str:
    z = complex(z)
    return f"{z.real:.17g}{z.imag:+.17g}i"


def parse_complex(text: str) -> complex:
    """Parse `a+bi`, `a`, or `bi` (also accepts python-style `a+bj`)."""
    text = text.strip().replace("j", "i")
    m = _PURE_IM_RE.match(text)
    if m:
        return complex(0.0, float(m.group("im")))
    m = _COMPLEX_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse complex number from {text!r}")
    re_part = float(m.group("re"))
    im_part = float(m.group("im")) if m.group("im") else 0.0
    return complex(re_part, im_part)
