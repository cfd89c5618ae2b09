"""Exact elements of Q(zeta_e) held as integer coefficient vectors on zeta_e^m.

Coefficient vectors are not unique (the powers of zeta_e are linearly
dependent), so equality goes through a canonical reduction: split e into
prime powers q_i, send zeta_e^t to the tensor of zeta_{q_i}^{t*u_i}
(u_i = (e/q_i)^-1 mod q_i), and on each axis of length q = p^a eliminate the
top base-p digit with sum_{d<p} zeta_q^{s + d q/p} = 0. What remains is a
coordinate vector in a basis of size phi(e).
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .algebra import factorint


@lru_cache(maxsize=256)
def _plan(e: int):
    fac = sorted(factorint(e).items()) if e > 1 else []
    qs = [p**a for p, a in fac]
    ps = [p for p, _ in fac]
    t = np.arange(e)
    if not qs:
        return qs, ps, np.zeros(e, dtype=np.int64)
    idx = np.zeros(e, dtype=np.int64)
    for q in qs:
        u = pow(e // q, -1, q)
        idx = idx * q + (t * u) % q
    return qs, ps, idx


def reduce_batch(coeffs: np.ndarray, e: int) -> np.ndarray:
    """Canonical coordinates for each row of an (n, e) integer array."""
    coeffs = np.asarray(coeffs, dtype=np.int64)
    if coeffs.ndim == 1:
        return reduce_batch(coeffs[None, :], e)[0]
    n = coeffs.shape[0]
    qs, ps, idx = _plan(e)
    if not qs:
        return coeffs.copy()
    T = np.zeros((n, e), dtype=np.int64)
    T[:, idx] = coeffs
    T = T.reshape([n] + qs)
    for axis, (q, p) in enumerate(zip(qs, ps), start=1):
        shape = list(T.shape)
        T = T.reshape(shape[:axis] + [p, q // p] + shape[axis + 1:])
        top = np.take(T, [p - 1], axis=axis)
        T = T - top
        # the top-digit slice is now zero; keep it as zeros for fixed shape
        T = T.reshape(shape)
    return T.reshape(n, e)


def is_zero_batch(coeffs: np.ndarray, e: int) -> np.ndarray:
    return ~reduce_batch(coeffs, e).any(axis=1)


class Cyclotomic:
    """sum_m c[m] zeta_e^m with integer c."""

    __slots__ = ("e", "c")

    def __init__(self, e: int, coeffs=None):
        self.e = int(e)
        c = np.zeros(self.e, dtype=np.int64) if coeffs is None else np.asarray(coeffs, dtype=np.int64)
        if c.shape != (self.e,):
            raise ValueError("coefficient vector has wrong length")
        self.c = c

    @classmethod
    def integer(cls, e: int, n: int) -> Cyclotomic:
        c = np.zeros(e, dtype=np.int64)
        c[0] = n
        return cls(e, c)

    @classmethod
    def root(cls, e: int, m: int = 1) -> Cyclotomic:
        c = np.zeros(e, dtype=np.int64)
        c[m % e] = 1
        return cls(e, c)

    def _check(self, other):
        if not isinstance(other, Cyclotomic):
            return Cyclotomic.integer(self.e, int(other))
        if other.e != self.e:
            raise ValueError("conductor mismatch")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Cyclotomic(self.e, self.c + other.c)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.e, -self.c)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __mul__(self, other):
        other = self._check(other)
        e = self.e
        out = np.zeros(e, dtype=np.int64)
        for m in np.flatnonzero(self.c):
            out += self.c[m] * np.roll(other.c, m)
        return Cyclotomic(e, out)

    __rmul__ = __mul__

    def galois(self, j: int) -> Cyclotomic:
        """zeta -> zeta^j (j coprime to e)."""
        out = np.zeros(self.e, dtype=np.int64)
        np.add.at(out, (np.arange(self.e) * j) % self.e, self.c)
        return Cyclotomic(self.e, out)

    def conj(self) -> Cyclotomic:
        return self.galois(-1)

    def reduced(self) -> np.ndarray:
        return reduce_batch(self.c, self.e)

    def is_zero(self) -> bool:
        return not self.reduced().any()

    def __eq__(self, other):
        try:
            other = self._check(other)
        except (TypeError, ValueError):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.e, self.reduced().tobytes()))

    def is_real(self) -> bool:
        return self == self.conj()

    def is_rational(self) -> bool:
        return self.to_int() is not None

    def to_int(self) -> int | None:
        """The rational integer this equals, if any."""
        r = self.reduced()
        # 1 reduces to a fixed vector; an integer n reduces to n times it
        one = reduce_batch(Cyclotomic.integer(self.e, 1).c, self.e)
        k = np.flatnonzero(one)[0]
        n = r[k] // one[k]
        return int(n) if np.array_equal(r, n * one) else None

    def to_complex(self) -> complex:
        z = np.exp(2j * np.pi * np.arange(self.e) / self.e)
        return complex(self.c @ z)

    def __repr__(self):
        terms = [f"{int(v)}*z{self.e}^{m}" for m, v in enumerate(self.c) if v]
        return " + ".join(terms) if terms else "0"

    def __str__(self):
        n = self.to_int()
        if n is not None:
            return str(n)
        return repr(self)
