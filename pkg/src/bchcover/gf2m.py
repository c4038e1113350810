"""Arithmetic in GF(2)[x] and in the extension fields GF(2^m), 2 <= m <= 16.

Polynomials over GF(2) are ints: bit i is the coefficient of x^i, so the
leading coefficient of a nonzero polynomial is 1 by construction and the
zero polynomial is 0 (its degree is the -inf sentinel, never -1).

Field elements are ints in [0, 2^m): bit i is the coefficient of alpha^i in
the polynomial basis, where alpha is a root of the modulus. Each degree uses
the lexicographically smallest primitive polynomial, so every build produces
bit-identical tables and codes:

    m=2 : x^2 + x + 1           m=10: x^10 + x^3 + 1
    m=3 : x^3 + x + 1           m=11: x^11 + x^2 + 1
    m=4 : x^4 + x + 1           m=12: x^12 + x^6 + x^4 + x + 1
    m=5 : x^5 + x^2 + 1         m=13: x^13 + x^4 + x^3 + x + 1
    m=6 : x^6 + x + 1           m=14: x^14 + x^5 + x^3 + x + 1
    m=7 : x^7 + x + 1           m=15: x^15 + x + 1
    m=8 : x^8 + x^4 + x^3       m=16: x^16 + x^5 + x^3 + x^2 + 1
          + x^2 + 1
    m=9 : x^9 + x^4 + 1

A FieldContext is immutable after construction and safe to share across
threads; all operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass

NEGATIVE_INFINITY = float("-inf")

# Lexicographically smallest primitive polynomial per degree, as int bitmasks.
PRIMITIVE_POLYS: dict[int, int] = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100000000101011,
    15: 0b1000000000000011,
    16: 0b10000000000101101,
}

MIN_DEGREE = 2
MAX_DEGREE = 16


@dataclass(frozen=True)
class BinaryPolynomial:
    """Polynomial over GF(2); bit i of ``value`` is the coefficient of x^i."""

    value: int

    def __post_init__(self) -> None:
        if self.value < 0:
            raise ValueError("polynomial bitmask must be non-negative")

    @classmethod
    def from_exponents(cls, *exponents: int) -> BinaryPolynomial:
        """Build x^e1 + x^e2 + ... from the given exponents."""
        v = 0
        for e in exponents:
            v |= 1 << e
        return cls(v)

    @classmethod
    def from_text(cls, text: str) -> BinaryPolynomial:
        """Parse a 0/1 coefficient string, leftmost character = x^0."""
        if not text or any(c not in "01" for c in text):
            raise ValueError(f"not a 0/1 coefficient string: {text!r}")
        v = 0
        for i, c in enumerate(text):
            if c == "1":
                v |= 1 << i
        return cls(v)

    @property
    def degree(self) -> int | float:
        """Degree of the polynomial; -inf for the zero polynomial."""
        return self.value.bit_length() - 1 if self.value else NEGATIVE_INFINITY

    @property
    def is_zero(self) -> bool:
        return self.value == 0

    def coefficient(self, i: int) -> int:
        return (self.value >> i) & 1

    def __add__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return BinaryPolynomial(self.value ^ other.value)

    __sub__ = __add__  # characteristic 2

    def __mul__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        a, b, r = self.value, other.value, 0
        while b:
            if b & 1:
                r ^= a
            a <<= 1
            b >>= 1
        return BinaryPolynomial(r)

    def __divmod__(self, other: BinaryPolynomial) -> tuple[BinaryPolynomial, BinaryPolynomial]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by the zero polynomial")
        q, r = 0, self.value
        db = other.value.bit_length()
        while r.bit_length() >= db:
            shift = r.bit_length() - db
            q |= 1 << shift
            r ^= other.value << shift
        return BinaryPolynomial(q), BinaryPolynomial(r)

    def __mod__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return divmod(self, other)[1]

    def __floordiv__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        return divmod(self, other)[0]

    def divides(self, other: BinaryPolynomial) -> bool:
        return (other % self).is_zero

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms = []
        for i in range(self.value.bit_length() - 1, -1, -1):
            if (self.value >> i) & 1:
                terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return " + ".join(terms)


ZERO = BinaryPolynomial(0)
ONE = BinaryPolynomial(1)
X = BinaryPolynomial(2)


class FieldContext:
    """GF(2^m) with precomputed log/exp tables (O(1) multiply and invert).

    ``exp_table[i]`` is alpha^i for 0 <= i < 2^m - 1, enumerating every
    nonzero element exactly once; ``log_table`` is its inverse map.
    """

    __slots__ = ("m", "primitive_poly", "order", "exp_table", "log_table")

    def __init__(self, m: int) -> None:
        if not MIN_DEGREE <= m <= MAX_DEGREE:
            raise ValueError(f"extension degree m={m} out of range [{MIN_DEGREE}, {MAX_DEGREE}]")
        self.m = m
        self.primitive_poly = BinaryPolynomial(PRIMITIVE_POLYS[m])
        self.order = 1 << m
        exp = [0] * (self.order - 1)
        log = [0] * self.order
        x = 1
        for i in range(self.order - 1):
            exp[i] = x
            log[x] = i
            x <<= 1
            if x & self.order:
                x ^= self.primitive_poly.value
        if x != 1:
            raise AssertionError(f"modulus for m={m} is not primitive")
        self.exp_table = tuple(exp)
        self.log_table = tuple(log)

    @staticmethod
    def add(a: int, b: int) -> int:
        """Field addition (XOR in characteristic 2)."""
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        """Field multiplication via log/exp tables; mul(a, 0) = 0."""
        if a == 0 or b == 0:
            return 0
        return self.exp_table[(self.log_table[a] + self.log_table[b]) % (self.order - 1)]

    def inv(self, a: int) -> int:
        """Multiplicative inverse; rejects zero."""
        if a == 0:
            raise ZeroDivisionError("zero has no multiplicative inverse")
        return self.exp_table[(self.order - 1 - self.log_table[a]) % (self.order - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        """a^e for e >= 0 (0^0 = 1)."""
        if a == 0:
            return 0 if e else 1
        return self.exp_table[(self.log_table[a] * e) % (self.order - 1)]

    def alpha_power(self, i: int) -> int:
        """alpha^i for any integer exponent i."""
        return self.exp_table[i % (self.order - 1)]

    def log(self, a: int) -> int:
        """Discrete log base alpha; rejects zero."""
        if a == 0:
            raise ValueError("log of zero is undefined")
        return self.log_table[a]

    def eval_poly(self, p: BinaryPolynomial, x: int) -> int:
        """Evaluate a GF(2) polynomial at a field element x, by Horner."""
        acc = 0
        for i in range(p.value.bit_length() - 1, -1, -1):
            acc = self.mul(acc, x) ^ ((p.value >> i) & 1)
        return acc

    def elements(self) -> range:
        return range(self.order)

    def __repr__(self) -> str:
        return f"FieldContext(GF(2^{self.m}), modulus={self.primitive_poly})"


def make_field(m: int) -> FieldContext:
    """Build the GF(2^m) context for 2 <= m <= 16 (fixed modulus table)."""
    return FieldContext(m)
