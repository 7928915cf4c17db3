"""Exact integer polynomials in a single variable ``z``."""

from __future__ import annotations

from typing import Iterable, Mapping


class IntPolynomial:
    """Immutable polynomial with integer coefficients, stored sparsely.

    Zero coefficients are never stored, so two polynomials are equal iff their
    coefficient maps are equal.
    """

    __slots__ = ("_coeffs", "_hash")

    def __init__(self, coefficients: Mapping[int, int] | Iterable[int] | None = None):
        if coefficients is None:
            items: Iterable[tuple[int, int]] = ()
        elif isinstance(coefficients, Mapping):
            items = coefficients.items()
        else:
            items = enumerate(coefficients)
        coeffs: dict[int, int] = {}
        for degree, value in items:
            degree = int(degree)
            if degree < 0:
                raise ValueError(f"negative degree {degree}")
            value = int(value)
            if value:
                coeffs[degree] = coeffs.get(degree, 0) + value
                if coeffs[degree] == 0:
                    del coeffs[degree]
        self._coeffs = dict(sorted(coeffs.items()))
        self._hash = None

    @classmethod
    def monomial(cls, degree: int, value: int = 1) -> IntPolynomial:
        return cls({degree: value})

    @property
    def coefficients(self) -> dict[int, int]:
        return dict(self._coeffs)

    @property
    def degree(self) -> int:
        """Degree of the polynomial; ``-1`` for the zero polynomial."""
        return max(self._coeffs, default=-1)

    def __getitem__(self, degree: int) -> int:
        return self._coeffs.get(degree, 0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial({0: other})
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._coeffs.items()))
        return self._hash

    def __add__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _coerce(other)
        out = dict(self._coeffs)
        for d, c in other._coeffs.items():
            out[d] = out.get(d, 0) + c
        return IntPolynomial(out)

    __radd__ = __add__

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial({d: -c for d, c in self._coeffs.items()})

    def __sub__(self, other: IntPolynomial | int) -> IntPolynomial:
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> IntPolynomial:
        return _coerce(other) - self

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        other = _coerce(other)
        out: dict[int, int] = {}
        for d1, c1 in self._coeffs.items():
            for d2, c2 in other._coeffs.items():
                out[d1 + d2] = out.get(d1 + d2, 0) + c1 * c2
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift(self, k: int = 1) -> IntPolynomial:
        """Multiply by ``z**k``."""
        return IntPolynomial({d + k: c for d, c in self._coeffs.items()})

    def to_json(self) -> dict[str, int]:
        return {str(d): c for d, c in self._coeffs.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> IntPolynomial:
        return cls({int(k): v for k, v in data.items()})

    def __repr__(self) -> str:
        return f"IntPolynomial({self._coeffs})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts = []
        for d, c in self._coeffs.items():
            if d == 0:
                term = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                term = mag + ("z" if d == 1 else f"z^{d}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, term))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


Z = IntPolynomial({1: 1})
ONE = IntPolynomial({0: 1})
ZERO = IntPolynomial()


def _coerce(value: IntPolynomial | int) -> IntPolynomial:
    if isinstance(value, IntPolynomial):
        return value
    if isinstance(value, int):
        return IntPolynomial({0: value})
    raise TypeError(f"cannot combine IntPolynomial with {type(value).__name__}")
