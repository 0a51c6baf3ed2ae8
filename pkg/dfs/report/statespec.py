"""Parser for state specifications such as ``0.7071|00> + 0.7071|11>``.

A spec is a sum of terms ``coef? |bits>`` joined by ``+`` or ``-``. The
coefficient is a real literal, an imaginary literal (``0.5i``, ``i``) or a
parenthesized complex literal (``(0.5+0.5i)``); ``*`` may separate it from the
ket. Kets repeat freely and their amplitudes add.
"""

import logging
import re
from typing import NamedTuple, Optional

import numpy as np

from dfs.errors import StateSpecError

logger = logging.getLogger("dfs.report")

NORM_TOL = 1e-6

_NUMBER = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_KET = re.compile(r"\|([01]+)>")


class ParsedState(NamedTuple):
    vector: np.ndarray
    n_qubits: int
    norm: float
    renormalized: bool


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, reason: str) -> StateSpecError:
        return StateSpecError(self.text, self.pos, reason)

    def coefficient(self) -> complex:
        char = self.peek()
        if char == "(":
            end = self.text.find(")", self.pos)
            if end < 0:
                raise self.fail("unclosed '('")
            inner = self.text[self.pos + 1:end].replace(" ", "")
            try:
                value = complex(inner.replace("i", "j"))
            except ValueError:
                raise self.fail(f"bad complex literal {inner!r}") from None
            self.pos = end + 1
            return value
        if char == "i":
            self.pos += 1
            return 1j
        match = _NUMBER.match(self.text, self.pos)
        if match is None:
            return 1.0
        self.pos = match.end()
        value = float(match.group())
        if self.pos < len(self.text) and self.text[self.pos] == "i":
            self.pos += 1
            return 1j * value
        return value

    def ket(self) -> str:
        if self.peek() == "*":
            self.pos += 1
            self.skip()
        match = _KET.match(self.text, self.pos)
        if match is None:
            raise self.fail("expected a ket like |01>")
        self.pos = match.end()
        return match.group(1)


def parse_state(text: str, n_qubits: Optional[int] = None) -> ParsedState:
    """Amplitudes in lexicographic order (leftmost bit is qubit 1)."""
    scanner = _Scanner(text)
    terms = []
    first = True
    while True:
        char = scanner.peek()
        if not char:
            break
        sign = 1.0
        if char in "+-":
            sign = -1.0 if char == "-" else 1.0
            scanner.pos += 1
        elif not first:
            raise scanner.fail("expected '+' or '-' between terms")
        coef = scanner.coefficient()
        bits = scanner.ket()
        terms.append((sign * coef, bits, scanner.pos))
        first = False
    if not terms:
        raise StateSpecError(text, 0, "no terms")

    widths = {len(bits) for _, bits, _ in terms}
    if n_qubits is not None:
        widths.add(n_qubits)
    if len(widths) > 1:
        expected = len(terms[0][1]) if n_qubits is None else n_qubits
        position = next(pos for _, bits, pos in terms if len(bits) != expected)
        raise StateSpecError(text, position, f"kets of different lengths {sorted(widths)}")
    k = widths.pop()

    vector = np.zeros(1 << k, dtype=np.complex128)
    for coef, bits, _ in terms:
        vector[int(bits, 2)] += coef
    norm = float(np.linalg.norm(vector))
    if norm == 0:
        raise StateSpecError(text, None, "amplitudes cancel to the zero vector")
    renormalized = abs(norm - 1) > NORM_TOL
    if renormalized:
        logger.warning(f"[STATE] norm {norm:.6g} for {text!r}; renormalized")
    return ParsedState(vector / norm, k, norm, renormalized)
