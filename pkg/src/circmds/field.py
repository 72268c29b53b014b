"""Arithmetic in GF(2^m), 1 <= m <= 16, with a user-supplied reduction polynomial.

Field elements are plain unsigned ints: bit k of the int is the coefficient
of x^k in the residue polynomial.  The zero and one elements are the ints
0 and 1, and addition is XOR.  A `GF2m` instance carries the reduction
polynomial and the log/antilog tables used for fast multiplication; all of
its operations are pure functions of their int arguments, so instances are
safe to share across processes.

Polynomials over GF(2) (used for the irreducibility test) are also encoded
as ints, e.g. 0x11D = x^8 + x^4 + x^3 + x^2 + 1.
"""

from __future__ import annotations


class FieldError(ValueError):
    """Base class for field construction and arithmetic errors."""


class DegreeMismatch(FieldError):
    """Reduction polynomial does not have degree exactly m."""


class Reducible(FieldError):
    """Reduction polynomial is not irreducible over GF(2)."""


class ZeroInverse(FieldError):
    """Multiplicative inverse of zero requested."""


class OutOfRange(FieldError):
    """Element value does not fit in the field."""


class BadSyntax(FieldError):
    """Malformed element literal."""


MAX_DEGREE = 16


def _poly_degree(p: int) -> int:
    return p.bit_length() - 1


def _poly_mod(a: int, mod: int) -> int:
    """Remainder of polynomial division over GF(2)."""
    dm = _poly_degree(mod)
    while a.bit_length() - 1 >= dm and a:
        a ^= mod << (a.bit_length() - 1 - dm)
    return a


def _poly_mulmod(a: int, b: int, mod: int) -> int:
    """Carry-less product of a and b, reduced mod `mod`."""
    dm = _poly_degree(mod)
    r = 0
    a = _poly_mod(a, mod)
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if (a >> dm) & 1:
            a ^= mod
    return r


def _poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _poly_mod(a, b)
    return a


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(poly: int, m: int) -> bool:
    """Rabin test: x^(2^m) == x mod poly, and gcd(x^(2^(m/p)) - x, poly) = 1
    for every prime p dividing m."""
    x = _poly_mod(2, poly)
    t = x
    for _ in range(m):
        t = _poly_mulmod(t, t, poly)
    if t != x:
        return False
    for p in _prime_factors(m):
        t = x
        for _ in range(m // p):
            t = _poly_mulmod(t, t, poly)
        if _poly_gcd(t ^ x, poly) != 1:
            return False
    return True


class GF2m:
    """The field GF(2^m) = GF(2)[x] / (poly).

    `poly` is the reduction polynomial as a bit pattern with bit m set.
    Multiplication uses log/antilog tables built on a primitive element;
    `mul_raw` is the shift-and-reduce reference used to build the tables
    and kept separate so the two strategies can be cross-checked.
    """

    def __init__(self, m: int, poly: int, trust: bool = False):
        if not 1 <= m <= MAX_DEGREE:
            raise DegreeMismatch(f"extension degree must be 1..{MAX_DEGREE}, got {m}")
        if poly >> m != 1:
            raise DegreeMismatch(
                f"polynomial 0x{poly:X} does not have degree exactly {m}"
            )
        if not trust and not is_irreducible(poly, m):
            raise Reducible(f"0x{poly:X} is reducible over GF(2)")
        self.m = m
        self.poly = poly
        self.order = 1 << m
        self._mult_order = self.order - 1
        self._hex_width = (m + 3) // 4
        self._build_tables()

    def _build_tables(self) -> None:
        q1 = self._mult_order
        g = self._find_generator()
        exp = [1] * (2 * q1)
        log = [0] * self.order
        v = 1
        for i in range(q1):
            exp[i] = v
            exp[i + q1] = v
            log[v] = i
            v = self.mul_raw(v, g)
        self.generator = g
        self._exp = exp
        self._log = log

    def _find_generator(self) -> int:
        q1 = self._mult_order
        primes = _prime_factors(q1) if q1 > 1 else []
        for g in range(2, self.order):
            if all(self._pow_raw(g, q1 // p) != 1 for p in primes):
                return g
        return 1  # m == 1: the unit group is trivial

    def _pow_raw(self, a: int, k: int) -> int:
        r = 1
        while k:
            if k & 1:
                r = self.mul_raw(r, a)
            a = self.mul_raw(a, a)
            k >>= 1
        return r

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def add(a: int, b: int) -> int:
        """Coefficient-wise XOR (characteristic 2)."""
        return a ^ b

    def mul_raw(self, a: int, b: int) -> int:
        """Shift-and-reduce multiplication, independent of the log tables."""
        top = self.order
        poly = self.poly
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & top:
                a ^= poly
        return r

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        return self._exp[self._mult_order - self._log[a]]

    def pow(self, a: int, k: int) -> int:
        """a^k for k >= 0, with 0^0 = 1."""
        if k < 0:
            raise ValueError("exponent must be non-negative")
        if a == 0:
            return 1 if k == 0 else 0
        return self._exp[self._log[a] * k % self._mult_order]

    def element_order(self, a: int) -> int:
        """Order of a in the multiplicative group."""
        if a == 0:
            raise ZeroInverse("0 is not in the multiplicative group")
        from math import gcd

        return self._mult_order // gcd(self._log[a], self._mult_order)

    def x_is_primitive(self) -> bool:
        """Whether the residue class of x (the element 0x2) generates the unit group."""
        if self.m == 1:
            return False  # x reduces to a constant in GF(2)
        return self.element_order(2) == self._mult_order

    # -- ranges and I/O -----------------------------------------------------

    def elements(self) -> range:
        return range(self.order)

    def nonzero_elements(self) -> range:
        return range(1, self.order)

    def parse_element(self, text: str) -> int:
        s = text.strip()
        if s[:2].lower() == "0x":
            s = s[2:]
        if not s or any(c not in "0123456789abcdefABCDEF" for c in s):
            raise BadSyntax(f"not a hex element literal: {text!r}")
        v = int(s, 16)
        if v >= self.order:
            raise OutOfRange(f"0x{v:X} does not fit in GF(2^{self.m})")
        return v

    def format_element(self, a: int) -> str:
        if not 0 <= a < self.order:
            raise OutOfRange(f"{a} does not fit in GF(2^{self.m})")
        return f"0x{a:0{self._hex_width}X}"

    # -- identity and sharing ----------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, GF2m) and (self.m, self.poly) == (other.m, other.poly)

    def __hash__(self) -> int:
        return hash((self.m, self.poly))

    def __repr__(self) -> str:
        return f"GF2m(m={self.m}, poly=0x{self.poly:X})"

    def __reduce__(self):
        return (get_field, (self.m, self.poly))


_CACHE: dict[tuple[int, int], GF2m] = {}


def get_field(m: int, poly: int) -> GF2m:
    """Shared, validated GF2m instance (table construction done once)."""
    key = (m, poly)
    gf = _CACHE.get(key)
    if gf is None:
        gf = _CACHE[key] = GF2m(m, poly)
    return gf
