"""Exact arithmetic substrate: small finite fields and 128-bit number theory.

Field elements are plain ints: the residue ``c0 + c1*x + ... + c_{k-1}*x^{k-1}``
is stored as ``c0 + c1*p + ... + c_{k-1}*p^{k-1}``.  Multiplication goes through
log/antilog tables built once per field.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from functools import lru_cache, reduce
from itertools import product

FIELD_LIMIT = 1 << 20
INT_LIMIT = 1 << 127

# Lexicographically smallest monic irreducible of each degree, coefficients
# listed constant term first (leading 1 included).  Extended on demand by
# `smallest_irreducible`, which reproduces every entry here.
MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 0, 0, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 1, 0, 0, 1),
    (5, 2): (2, 0, 1),
    (7, 2): (1, 0, 1),
}


class FieldError(ValueError):
    pass


# ---------------------------------------------------------------- integers

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# Miller-Rabin with the first 13 primes as bases is exact below this bound
# (Sorenson & Webster 2015).
_MR13_BOUND = 3317044064679887385961981


def _mr_round(n: int, d: int, s: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic primality for ``0 <= n < 2**127``.

    Below 3.3e24 the 13-prime Miller-Rabin base set is proven exact.  Above it
    every base ``a <= 2 ln(n)^2`` is tried (Miller's test, exact under GRH).
    """
    if n < 0 or n >= INT_LIMIT:
        raise ValueError(f"is_prime: {n} outside [0, 2^127)")
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if not all(_mr_round(n, d, s, a) for a in _SMALL_PRIMES):
        return False
    if n < _MR13_BOUND:
        return True
    bound = min(n - 2, int(2 * math.log(n) ** 2))
    return all(_mr_round(n, d, s, a) for a in range(43, bound + 1))


def _pollard_brent(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorint(n: int) -> dict[int, int]:
    """Prime factorization ``{p: e}`` by trial division then Pollard-Brent."""
    if n < 1 or n >= INT_LIMIT:
        raise ValueError(f"factorint: {n} outside [1, 2^127)")
    out: dict[int, int] = {}
    for p in range(2, 1000):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    rng = random.Random(n)
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_brent(m, rng)
        stack += [d, m // d]
    return dict(sorted(out.items()))


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorint(n).items():
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return sorted(divs)


def prime_power(q: int) -> tuple[int, int] | None:
    """``(p, f)`` with ``q = p**f``, or None."""
    if q < 2:
        return None
    fac = factorint(q)
    if len(fac) != 1:
        return None
    return next(iter(fac.items()))


def lcm(*xs: int) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), xs, 1)


def euler_phi(n: int) -> int:
    out = n
    for p in factorint(n):
        out = out // p * (p - 1)
    return out


def multiplicative_order(a: int, n: int) -> int:
    if math.gcd(a, n) != 1:
        raise ValueError("not a unit")
    k, x = 1, a % n
    while x != 1 % n:
        x = x * a % n
        k += 1
    return k


# ------------------------------------------------------ number-theoretic scans

def lemma22_case3_scan(f_max: int) -> list[int]:
    """Odd primes ``7 <= f <= f_max`` with (3^f+1)/4 and (3^f-1)/2 distinct odd primes."""
    if f_max > 80:
        raise ValueError("f_max must be <= 80 so that 3^f stays below 2^127")
    hits = []
    for f in range(7, f_max + 1):
        if f % 2 == 0 or not is_prime(f):
            continue
        r, s = (3**f + 1) // 4, (3**f - 1) // 2
        if r != s and r % 2 and s % 2 and is_prime(r) and is_prime(s):
            hits.append(f)
    return hits


def suzuki_factor_check(f: int) -> bool:
    """4^(2f+1)+1 == (2^(2f+1)+2^(f+1)+1)(2^(2f+1)-2^(f+1)+1) and 5 divides it."""
    if f < 1 or 2 * f + 1 > 60:
        raise ValueError("suzuki_factor_check needs 1 <= f and 2f+1 <= 60")
    n = 2 * f + 1
    lhs = 4**n + 1
    rhs = (2**n + 2 ** (f + 1) + 1) * (2**n - 2 ** (f + 1) + 1)
    return lhs == rhs and lhs % 5 == 0


def lemma23_ratio(f: int) -> Fraction:
    """(3^f - 3) / (8f): lower bound on real classes of order s per outer class."""
    return Fraction(3**f - 3, 8 * f)


# ------------------------------------------------------------------ fields

def _poly_mod_roots(coeffs: tuple[int, ...], p: int) -> bool:
    return any(sum(c * pow(x, i, p) for i, c in enumerate(coeffs)) % p == 0 for x in range(p))


def _pmod(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    a = a[:]
    dm = len(m) - 1
    inv = pow(m[-1], -1, p)
    while len(a) - 1 >= dm and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1] * inv % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Irreducibility of a monic polynomial over GF(p) by trial division.

    Only intended for the small degrees used here (k <= 20 with p^k <= 2^20).
    """
    k = len(coeffs) - 1
    if k == 1:
        return True
    if _poly_mod_roots(coeffs, p):
        return False
    for d in range(2, k // 2 + 1):
        for tail in product(range(p), repeat=d):
            if _pmod(list(coeffs), tuple(tail) + (1,), p) == []:
                return False
    return True


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Monic irreducible of degree k minimizing sum(c_i p^i)."""
    for code in range(p**k):
        tail = tuple((code // p**i) % p for i in range(k))
        if tail[0] and is_irreducible(tail + (1,), p):
            return tail + (1,)
    raise FieldError(f"no irreducible of degree {k} over GF({p})")  # pragma: no cover


class Field:
    """GF(p^k) with elements encoded as ints in ``range(p**k)``."""

    def __init__(self, p: int, k: int = 1):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if k < 1 or p**k > FIELD_LIMIT:
            raise FieldError(f"GF({p}^{k}) exceeds the 2^20 desk limit")
        self.p, self.k, self.q = p, k, p**k
        self.modulus = MODULI.get((p, k)) or (smallest_irreducible(p, k) if k > 1 else (0, 1))
        if k > 1 and not is_irreducible(self.modulus, p):
            raise FieldError(f"modulus {self.modulus} reducible over GF({p})")
        self._build_tables()

    def __repr__(self):
        return f"GF({self.q})"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.k) == (other.p, other.k)

    def __hash__(self):
        return hash((self.p, self.k))

    # digit helpers
    def digits(self, a: int) -> list[int]:
        return [(a // self.p**i) % self.p for i in range(self.k)]

    def from_digits(self, ds) -> int:
        return sum(d * self.p**i for i, d in enumerate(ds))

    def _mulx(self, ds: list[int]) -> list[int]:
        p, m = self.p, self.modulus
        top = ds[-1]
        out = [0] + ds[:-1]
        return [(c - top * m[i]) % p for i, c in enumerate(out)]

    def _build_tables(self):
        p, k, q = self.p, self.k, self.q
        if k == 1:
            gen = next(g for g in range(1, p) if p == 2 or all(pow(g, (p - 1) // r, p) != 1 for r in factorint(p - 1)))
            self.exp = [pow(gen, i, p) for i in range(q - 1)]
        else:
            # search for a primitive element in encoding order
            for gen in range(p, q):
                seq = [1]
                gd = self.digits(gen)
                cur = [1] + [0] * (k - 1)
                ok = True
                for _ in range(q - 2):
                    cur = self._poly_mul_digits(cur, gd)
                    v = self.from_digits(cur)
                    if v == 1:
                        ok = False
                        break
                    seq.append(v)
                if ok:
                    self.exp = seq
                    break
        self.generator = self.exp[1] if q > 2 else 1
        self.log = [0] * q
        for i, v in enumerate(self.exp):
            self.log[v] = i

    def _poly_mul_digits(self, a: list[int], b: list[int]) -> list[int]:
        p, k = self.p, self.k
        acc = [0] * k
        cur = a[:]
        for c in b:
            if c:
                acc = [(x + c * y) % p for x, y in zip(acc, cur)]
            cur = self._mulx(cur)
        return acc

    # arithmetic
    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self.from_digits((x + y) % self.p for x, y in zip(self.digits(a), self.digits(b)))

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        if self.p == 2:
            return a
        return self.from_digits(-x % self.p for x in self.digits(a))

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in " + repr(self))
        return self.exp[-self.log[a] % (self.q - 1)]

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("inverse of 0 in " + repr(self))
            return 1 if n == 0 else 0
        return self.exp[self.log[a] * n % (self.q - 1)]

    def frobenius(self, a: int, times: int = 1) -> int:
        return self.pow(a, self.p**times)

    def elements(self) -> range:
        return range(self.q)

    def order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative order")
        return (self.q - 1) // math.gcd(self.log[a], self.q - 1)

    def is_square(self, a: int) -> bool:
        return a == 0 or self.p == 2 or self.log[a] % 2 == 0

    def subfield_elements(self, d: int) -> list[int]:
        """Elements of the subfield GF(p^d), d | k."""
        if self.k % d:
            raise FieldError(f"GF({self.p}^{d}) is not a subfield of {self!r}")
        step = (self.q - 1) // (self.p**d - 1)
        return [0] + [self.exp[i] for i in range(0, self.q - 1, step)]


@lru_cache(maxsize=None)
def field_make(p: int, k: int = 1) -> Field:
    return Field(p, k)


def gf(q: int) -> Field:
    pp = prime_power(q)
    if pp is None:
        raise FieldError(f"{q} is not a prime power")
    return field_make(*pp)
