"""Exact arithmetic in S-integer rings: Z, Z[1/m], and the real quadratic
orders Z[sqrt(d)], each optionally with a set of inverted rational primes.

Every element is stored as (a + b*sqrt(d))/r with arbitrary-precision
integers a, b, r, normalized so that r > 0 and gcd(a, b, r) = 1.  The
representation is unique, so equality of elements is equality of the
stored fields.  The same value type also represents arbitrary elements
of the fraction field (denominators not supported on the inverted
primes); `is_integral` tells the two apart, and exact division back
into the ring goes through `div_exact`.

Canonical string form (whitespace-free, round-trips bit for bit):

    integers     "-12"
    fractions    "7/8"          reduced, denominator > 0
    quadratic    "(3-2*w)/4"    w stands for sqrt(d); "/r" is omitted
                                when r = 1, and elements with b = 0 fall
                                back to the rational form
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt
from typing import NamedTuple

ORDER_SEARCH_CAP = 10**6


class ParseError(ValueError):
    """Malformed ring spec or element string."""


class RingMismatchError(ValueError):
    """Operands belong to different rings."""


def _prime_factors(n: int) -> tuple[int, ...]:
    """Ascending distinct prime factors of |n|."""
    n = abs(n)
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out.append(n)
    return tuple(out)


def _is_squarefree(n: int) -> bool:
    if n < 1:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        if n % p == 0:
            n //= p
        p += 1 if p == 2 else 2
    return True


def _strip_part(n: int, m: int) -> int:
    """Divide out of |n| every prime factor it shares with m."""
    n = abs(n)
    if n == 0:
        return 0
    g = gcd(n, m)
    while g > 1:
        n //= g
        g = gcd(n, m)
    return n


@dataclass(frozen=True)
class Ring:
    """Descriptor of a supported coefficient ring.

    d is None for the rational kinds (Z when m == 1, Z[1/m] otherwise)
    and a squarefree integer >= 2 for the real quadratic order
    Z[sqrt(d)]; the prime factors of m are the inverted primes.
    """

    d: int | None = None
    m: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be >= 1, got {self.m}")
        if self.d is not None:
            if self.d < 2:
                raise ValueError(f"d must be >= 2, got {self.d}")
            if not _is_squarefree(self.d):
                raise ValueError(f"d must be squarefree, got {self.d}")

    @property
    def is_quadratic(self) -> bool:
        return self.d is not None

    @property
    def inverted_primes(self) -> tuple[int, ...]:
        return _prime_factors(self.m) if self.m > 1 else ()

    @property
    def has_infinite_units(self) -> bool:
        return self.is_quadratic or self.m > 1

    @property
    def zero(self) -> RElem:
        return RElem(self, 0)

    @property
    def one(self) -> RElem:
        return RElem(self, 1)

    @property
    def root(self) -> RElem:
        """The element sqrt(d)."""
        if not self.is_quadratic:
            raise ValueError("root requires a quadratic ring")
        return RElem(self, 0, 1)

    def el(self, a, b: int = 0, r: int = 1) -> RElem:
        if isinstance(a, RElem):
            if a.ring != self:
                raise RingMismatchError(f"element of {a.ring} used in {self}")
            return a
        return RElem(self, a, b, r)

    def parse(self, s: str) -> RElem:
        """Inverse of str(element) for this ring; accepts unreduced input."""
        text = s.strip()
        m = _INT_RE.fullmatch(text)
        if m:
            return RElem(self, int(text))
        m = _FRAC_RE.fullmatch(text)
        if m:
            return RElem(self, int(m.group(1)), 0, int(m.group(2)))
        m = _QUAD_RE.fullmatch(text)
        if m:
            if not self.is_quadratic:
                raise ParseError(f"{s!r} has a sqrt part but the ring is {self}")
            r = int(m.group(3)) if m.group(3) else 1
            return RElem(self, int(m.group(1)), int(m.group(2)), r)
        raise ParseError(f"cannot parse ring element {s!r}")

    def from_json(self, v) -> RElem:
        """Element from a JSON payload value (bare integer or canonical string)."""
        if isinstance(v, bool):
            raise ParseError(f"not a ring element: {v!r}")
        if isinstance(v, int):
            return RElem(self, v)
        if isinstance(v, str):
            return self.parse(v)
        raise ParseError(f"not a ring element: {v!r}")

    def fundamental_unit(self) -> RElem:
        """Smallest unit > 1 of Z[sqrt(d)] (independent of the inverted primes)."""
        if not self.is_quadratic:
            raise ValueError("fundamental unit requires a quadratic ring")
        x, y = _pell_min_unit(self.d)
        return RElem(self, x, y)

    def unit_generators(self) -> tuple[RElem, ...]:
        """Fixed, ordered generating set of the unit group:
        fundamental unit first (quadratic rings), then the inverted
        primes in ascending order, then -1."""
        gens: list[RElem] = []
        if self.is_quadratic:
            gens.append(self.fundamental_unit())
        gens.extend(RElem(self, p) for p in self.inverted_primes)
        gens.append(RElem(self, -1))
        return tuple(gens)

    def __str__(self) -> str:
        if self.d is None:
            return "Z" if self.m == 1 else f"Z[1/{self.m}]"
        if self.m == 1:
            return f"Z[sqrt({self.d})]"
        return f"Z[sqrt({self.d}),1/{self.m}]"


_INT_RE = re.compile(r"[+-]?\d+")
_FRAC_RE = re.compile(r"([+-]?\d+)/(\d+)")
_QUAD_RE = re.compile(r"\(([+-]?\d+)([+-]\d+)\*w\)(?:/(\d+))?")

_RING_INV_RE = re.compile(r"Z\[1/(\d+)\]")
_RING_QUAD_RE = re.compile(r"Z\[sqrt\((\d+)\)\]")
_RING_QUAD_INV_RE = re.compile(r"Z\[sqrt\((\d+)\),1/(\d+)\]")


def make_ring(spec: str) -> Ring:
    """Parse a ring spec: "Z", "Z[1/m]", "Z[sqrt(d)]", or "Z[sqrt(d),1/m]"."""
    s = spec.strip()
    if s == "Z":
        return Ring()
    m = _RING_INV_RE.fullmatch(s)
    if m:
        mm = int(m.group(1))
        if mm < 2:
            raise ParseError(f"inverted modulus must be >= 2 in {spec!r}")
        return Ring(None, mm)
    m = _RING_QUAD_RE.fullmatch(s)
    if m:
        return _quad_ring(spec, int(m.group(1)), 1)
    m = _RING_QUAD_INV_RE.fullmatch(s)
    if m:
        mm = int(m.group(2))
        if mm < 2:
            raise ParseError(f"inverted modulus must be >= 2 in {spec!r}")
        return _quad_ring(spec, int(m.group(1)), mm)
    raise ParseError(f"unrecognized ring spec {spec!r}")


def _quad_ring(spec: str, d: int, m: int) -> Ring:
    if d < 2:
        raise ParseError(f"d must be >= 2 in {spec!r}")
    if not _is_squarefree(d):
        raise ParseError(f"d must be squarefree in {spec!r}")
    return Ring(d, m)


class RElem:
    """One exact element (a + b*sqrt(d))/r of a ring's fraction field.

    Instances are immutable by convention; all operators return new
    elements.  Mixed arithmetic with Python ints promotes the int.
    """

    __slots__ = ("ring", "a", "b", "r")

    def __init__(self, ring: Ring, a: int, b: int = 0, r: int = 1):
        if r == 0:
            raise ZeroDivisionError("zero denominator")
        if b and not ring.is_quadratic:
            raise ValueError(f"sqrt coefficient in the rational ring {ring}")
        if r < 0:
            a, b, r = -a, -b, -r
        g = gcd(gcd(a, b), r)
        if g > 1:
            a, b, r = a // g, b // g, r // g
        self.ring = ring
        self.a = a
        self.b = b
        self.r = r

    # -- coercion ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RElem):
            if other.ring != self.ring:
                raise RingMismatchError(
                    f"mixed rings: {self.ring} and {other.ring}")
            return other
        if isinstance(other, int):
            return RElem(self.ring, other)
        return None

    # -- ring structure ------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RElem(self.ring,
                     self.a * o.r + o.a * self.r,
                     self.b * o.r + o.b * self.r,
                     self.r * o.r)

    __radd__ = __add__

    def __neg__(self):
        return RElem(self.ring, -self.a, -self.b, self.r)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = self.ring.d or 0
        return RElem(self.ring,
                     self.a * o.a + d * self.b * o.b,
                     self.a * o.b + self.b * o.a,
                     self.r * o.r)

    __rmul__ = __mul__

    def inverse(self) -> RElem:
        """Inverse in the fraction field."""
        if not self:
            raise ZeroDivisionError("inverse of zero")
        d = self.ring.d or 0
        n = self.a * self.a - d * self.b * self.b
        # n != 0: d is squarefree, so a^2 = d b^2 forces a = b = 0
        return RElem(self.ring, self.r * self.a, -self.r * self.b, n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self
        if n < 0:
            base = self.inverse()
            n = -n
        out = RElem(self.ring, 1)
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- predicates ----------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.a or self.b)

    def is_integral(self) -> bool:
        """True when the element lies in the ring itself (denominator
        supported on the inverted primes)."""
        return self.r == 1 or _strip_part(self.r, self.ring.m) == 1

    def is_unit(self) -> bool:
        """True when the element and its inverse both lie in the ring."""
        if not self:
            return False
        return self.is_integral() and self.inverse().is_integral()

    def div_exact(self, other) -> RElem | None:
        """self/other when the quotient lies in the ring, else None."""
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot divide by {other!r}")
        if not o:
            raise ZeroDivisionError("division by zero")
        q = self * o.inverse()
        return q if q.is_integral() else None

    # -- order and identity --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, RElem):
            return (self.ring == other.ring and self.a == other.a
                    and self.b == other.b and self.r == other.r)
        if isinstance(other, int):
            return self.b == 0 and self.r == 1 and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.a, self.b, self.r))

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # (a1 + b1 w)/r1 < (a2 + b2 w)/r2  <=>  p < q*w  with the values below
        p = self.a * o.r - o.a * self.r
        q = o.b * self.r - self.b * o.r
        if q == 0:
            return p < 0
        d = self.ring.d or 0
        if q > 0:
            return p < 0 or p * p < q * q * d
        return p < 0 and p * p > q * q * d

    def __le__(self, other):
        return self == other or self < other

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o < self

    def __ge__(self, other):
        return self == other or self > other

    # -- text ------------------------------------------------------------

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a) if self.r == 1 else f"{self.a}/{self.r}"
        core = f"({self.a}{self.b:+d}*w)"
        return core if self.r == 1 else f"{core}/{self.r}"

    def __repr__(self) -> str:
        return f"RElem({self.ring}, {self})"


@lru_cache(maxsize=None)
def _pell_min_unit(d: int) -> tuple[int, int]:
    """Smallest (x, y) with y >= 1 and x^2 - d*y^2 = 1 or -1, from the
    continued fraction expansion of sqrt(d)."""
    a0 = isqrt(d)
    m, den, a = 0, 1, a0
    p_prev, p = 1, a0
    q_prev, q = 0, 1
    for _ in range(10**6):
        if p * p - d * q * q in (1, -1):
            return p, q
        m = den * a - m
        den = (d - m * m) // den
        a = (a0 + m) // den
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
    raise RuntimeError(f"continued fraction of sqrt({d}) did not close")


def fundamental_unit(ring: Ring) -> RElem:
    return ring.fundamental_unit()


def congruent_mod(x: RElem, y, modulus: RElem) -> bool:
    """True when (x - y)/modulus lies in the ring.  modulus must be nonzero."""
    if not modulus:
        raise ZeroDivisionError("zero modulus")
    return (x - y).div_exact(modulus) is not None


def canonical_associate(x: RElem) -> tuple[RElem, RElem]:
    """Deterministic representative of the principal ideal (x).

    Returns (y, u) with y = u*x and u a unit.  Rational rings get the
    positive integer generator coprime to the inverted primes; quadratic
    rings get a denominator-free, content-stripped, height-minimal (under
    the fundamental unit walk) representative with positive real value.
    """
    ring = x.ring
    if not x:
        raise ZeroDivisionError("zero has no associate normal form")
    if not x.is_integral():
        raise ValueError(f"{x} is not in {ring}; associates are defined "
                         "for ring elements only")
    if not ring.is_quadratic:
        n = _strip_part(x.a, ring.m)
        y = RElem(ring, n)
        u = y / x
        return y, u

    # clear the denominator (a unit, by integrality) and strip the
    # inverted-prime part of the coefficient content; content and height
    # are invariant under the unit walk below, so this commutes with it
    y = RElem(ring, x.a, x.b)
    content = gcd(y.a, y.b)
    s = content // _strip_part(content, ring.m)
    if s > 1:
        y = RElem(ring, y.a // s, y.b // s)
    if y < 0:
        y = -y

    # anchor at the unique positive associate with |N| <= y^2 < |N|*e^2:
    # this depends only on the ideal (x), so everything after it is a
    # deterministic function of the ideal, never of the input associate
    eps = ring.fundamental_unit()
    eps_inv = eps.inverse()
    lo = RElem(ring, abs(y.a * y.a - ring.d * y.b * y.b))
    hi = lo * eps * eps
    while y * y < lo:
        y = y * eps
    while y * y >= hi:
        y = y * eps_inv

    def height(z: RElem) -> int:
        return max(abs(z.a), abs(z.b))

    while True:  # walk downhill to the height valley
        h = height(y)
        for u0 in (eps, eps_inv):
            if height(y * u0) < h:
                y = y * u0
                break
        else:
            break
    # the valley floor may be a plateau of equal-height associates (a
    # unit's orbit has several of height 1); gather it whole and pick
    # one representative by coordinate size, then by exact value
    plateau = [y]
    h = height(y)
    for u0 in (eps, eps_inv):
        z = y * u0
        while height(z) == h:
            plateau.append(z)
            z = z * u0
    best = None
    for c in plateau:
        if c < 0:
            c = -c
        if best is None or (abs(c.a) + abs(c.b), c) < (abs(best.a) + abs(best.b), best):
            best = c
    u = best / x
    if not u.is_unit():
        raise AssertionError("associate reduction produced a non-unit factor")
    return best, u


class UnitsResult(NamedTuple):
    """Outcome of a search for units congruent to 1.

    finite_group means the ring's unit group is finite and `units` is
    exhaustive; `stalled` lists generators whose multiplicative order in
    the quotient was not found within the step cap.
    """

    units: tuple[RElem, ...]
    finite_group: bool
    stalled: tuple[RElem, ...]


def units_congruent_one(ring: Ring, modulus: RElem, count: int, *,
                        order_cap: int = ORDER_SEARCH_CAP) -> UnitsResult:
    """Up to `count` distinct units v != 1 with v congruent to 1 mod `modulus`.

    Units come out as powers g**(j*order) of the fixed generator set,
    where order is the multiplicative order of g in the quotient by the
    modulus, found by power iteration capped at `order_cap` steps.
    """
    if not modulus:
        raise ZeroDivisionError("zero modulus")
    if count < 0:
        raise ValueError("count must be >= 0")
    one = ring.one
    minus_one = RElem(ring, -1)
    order_of = _order_finder(ring, modulus, order_cap)

    orders: dict[RElem, int] = {}
    stalled: list[RElem] = []
    for g in ring.unit_generators():
        o = order_of(g)
        if o is None:
            stalled.append(g)
        else:
            orders[g] = o

    units: list[RElem] = []
    if not ring.has_infinite_units:
        # only the torsion unit -1 can qualify, and only when it is 1 mod a
        if orders.get(minus_one) == 1 and count > 0:
            units.append(minus_one)
        return UnitsResult(tuple(units[:count]), True, tuple(stalled))

    seen: set[RElem] = set()
    can_grow = any(g != minus_one for g in orders)
    j = 1
    while len(units) < count:
        for g, o in orders.items():
            v = g ** (j * o)
            if v != one and v not in seen:
                seen.add(v)
                units.append(v)
                if len(units) >= count:
                    break
        if not can_grow:
            break
        j += 1
    return UnitsResult(tuple(units), False, tuple(stalled))


def _order_finder(ring: Ring, modulus: RElem, cap: int):
    """Return a function computing multiplicative orders in the quotient
    by `modulus`, with element coordinates reduced along the way so the
    iteration runs in bounded space."""
    one = ring.one
    if ring.is_quadratic:
        # any rational integer in the ideal works as a coordinate modulus;
        # the norm of the denominator-cleared associate is one
        nmod = abs(modulus.a * modulus.a - ring.d * modulus.b * modulus.b)

        def order_of(g: RElem):
            cur = g
            for e in range(1, cap + 1):
                if congruent_mod(cur, one, modulus):
                    return e
                nxt = cur * g
                cur = RElem(ring, nxt.a % nmod, nxt.b % nmod) if nmod else nxt
            return None

        return order_of

    n = _strip_part(modulus.a, ring.m)  # positive generator of the ideal

    def order_of(g: RElem):
        gi = g.a % n
        target = 1 % n
        cur = gi
        e = 1
        while cur != target:
            cur = cur * gi % n
            e += 1
            if e > cap:
                return None
        return e

    return order_of
