"""Exact character tables by the Dixon-Schneider method.

Class-sum structure constants give commuting matrices over GF(p) with
p = 1 mod exp(G) and p > 2 sqrt|G|. Their common eigenvectors are the central
characters; degrees come from the orthogonality relation and each value is
lifted from its eigenvalue multiplicities on the powers of a class
representative. Values are kept as those multiplicities: row x, class i holds
an integer vector mu of length o(g_i) with chi(g_i) = sum_m mu[m] zeta^m for
zeta = exp(2 pi i / o(g_i)).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import kernels
from .algebra import divisors, factorint, is_prime
from .classes import ClassSet, conjugacy_classes, unit_generators
from .cyclotomic import Cyclotomic, reduce_batch
from .perm import CapError, PermGroup, coset_action

CLASS_COUNT_CAP = 120
NO_SPLIT_LIMIT = 3


class IntegrityError(AssertionError):
    """Internal consistency failure (Brauer equality or orthogonality)."""


class SplitError(RuntimeError):
    pass


# ------------------------------------------------------------ primes, roots

def exponent(C: ClassSet) -> int:
    return C.exponent


def dixon_prime(order: int, e: int) -> int:
    """Smallest prime p = 1 mod e with p > 2 sqrt(order)."""
    p = e + 1
    while not (p * p > 4 * order and is_prime(p)):
        p += e
    return p


def _primitive_root(p: int) -> int:
    qs = list(factorint(p - 1))
    g = 2
    while any(pow(g, (p - 1) // q, p) == 1 for q in qs):
        g += 1
    return g


def _matmul_mod(A: np.ndarray, B: np.ndarray, p: int) -> np.ndarray:
    if p < 2**26:
        # products < 2^52, so sums over fewer than 2^10 terms stay below 2^62
        k = A.shape[1]
        if k < 1024:
            return (A @ B) % p
    return np.array((A.astype(object) @ B.astype(object)) % p, dtype=np.int64)


def _nullspace_mod(M: np.ndarray, p: int) -> np.ndarray:
    """Rows spanning {v : M v = 0} over GF(p)."""
    n = M.shape[1]
    R, piv = kernels.rref_mod(M, p)
    free = [c for c in range(n) if c not in set(piv)]
    out = np.zeros((len(free), n), dtype=np.int64)
    for t, f in enumerate(free):
        out[t, f] = 1
        for r, c in enumerate(piv):
            out[t, c] = (-R[r, f]) % p
    return out


def _charpoly_mod(R: np.ndarray, p: int) -> list[int]:
    """Characteristic polynomial (low-to-high coefficients) via Hessenberg form."""
    n = R.shape[0]
    H = [list(map(int, row)) for row in np.asarray(R) % p]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if H[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            H[m], H[piv] = H[piv], H[m]
            for row in H:
                row[m], row[piv] = row[piv], row[m]
        inv = pow(H[m][m - 1], -1, p)
        for i in range(m + 1, n):
            f = H[i][m - 1] * inv % p
            if f:
                Hi, Hm = H[i], H[m]
                for c in range(n):
                    Hi[c] = (Hi[c] - f * Hm[c]) % p
                for row in H:
                    row[m] = (row[m] + f * row[i]) % p
    polys = [[1]]
    for k in range(1, n + 1):
        prev = polys[-1]
        cur = [0] + prev[:]                      # x * p_{k-1}
        hkk = H[k - 1][k - 1]
        for t, c in enumerate(prev):
            cur[t] = (cur[t] - hkk * c) % p
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = prod * H[i][i - 1] % p
            coef = H[i - 1][k - 1] * prod % p
            if coef:
                for t, c in enumerate(polys[i - 1]):
                    cur[t] = (cur[t] - coef * c) % p
        polys.append(cur)
    return polys[-1]


def _roots_mod(poly: list[int], p: int) -> list[int]:
    """All roots in GF(p) of a polynomial that splits into linear factors."""
    coeffs = np.array(poly[::-1], dtype=np.int64)
    roots = []
    chunk = 1 << 20
    for lo in range(0, p, chunk):
        x = np.arange(lo, min(p, lo + chunk), dtype=np.int64)
        v = np.zeros_like(x)
        for c in coeffs:
            v = (v * x + c) % p
        roots.extend(int(r) for r in x[v == 0])
    return roots


# ------------------------------------------------------- structure constants

def _inverse_base_images(G: PermGroup) -> np.ndarray:
    X = G.elements()
    out = np.empty((len(X), len(G.base)), dtype=np.int64)
    for j, b in enumerate(G.base):
        out[:, j] = np.argmax(X == b, axis=1)
    return out


def class_matrices(C: ClassSet) -> np.ndarray:
    """A[i, j, k] = #{(x, y) in C_i x C_j : x y = z_k} for the representative z_k."""
    G = C.group
    r = len(C)
    if G.order == 1:
        return np.ones((1, 1, 1), dtype=np.int64)
    xinv = _inverse_base_images(G)
    radix = G._key_radix()
    keys = G.element_keys()
    cls = np.ascontiguousarray(C.class_of, dtype=np.int64)
    A = np.empty((r, r, r), dtype=np.int64)
    for k in range(r):
        z = np.asarray(C.reps[k], dtype=np.int64)
        A[:, :, k] = kernels.pair_counts(z, xinv, radix, keys, cls, r)
    return A


# ------------------------------------------------------------------ tables

@dataclass
class CharacterTable:
    classes: ClassSet
    e: int
    p: int
    degrees: list[int]
    values: list[np.ndarray]          # per class i: (rows, o_i) multiplicities
    seed: int = 0
    _modp: np.ndarray | None = field(default=None, repr=False)

    def __len__(self):
        return len(self.degrees)

    def value(self, row: int, cls: int) -> Cyclotomic:
        o = self.classes.orders[cls]
        c = np.zeros(self.e, dtype=np.int64)
        c[np.arange(o) * (self.e // o)] = self.values[cls][row]
        return Cyclotomic(self.e, c)

    def row(self, i: int) -> list[Cyclotomic]:
        return [self.value(i, k) for k in range(len(self.classes))]

    def _fixed_by(self, mult: int) -> np.ndarray:
        ok = np.ones(len(self), dtype=bool)
        for k, o in enumerate(self.classes.orders):
            M = self.values[k]
            perm = (np.arange(o) * mult) % o
            ok &= (M[:, perm] == M).all(axis=1)
        return ok

    @property
    def real(self) -> list[bool]:
        return [bool(x) for x in self._fixed_by(-1)]

    @property
    def rational(self) -> list[bool]:
        ok = np.ones(len(self), dtype=bool)
        for j in unit_generators(self.e):
            ok &= self._fixed_by(j)
        return [bool(x) for x in ok]

    def galois_row_permutation(self, j: int) -> list[int] | None:
        """Row index of chi^(j) for every chi, or None if not a permutation."""
        index = {self._row_key(i): i for i in range(len(self))}
        out = []
        for i in range(len(self)):
            key = b"".join(self.values[k][i][(np.arange(o) * j) % o].tobytes()
                           for k, o in enumerate(self.classes.orders))
            if key not in index:
                return None
            out.append(index[key])
        return out if sorted(out) == list(range(len(self))) else None

    def _row_key(self, i: int) -> bytes:
        return b"".join(self.values[k][i].tobytes() for k in range(len(self.classes)))

    def kernel_contains(self, row: int, classes) -> bool:
        """chi(g) = chi(1) on every listed class: all eigenvalues are 1."""
        d = self.degrees[row]
        return all(self.values[k][row][0] == d for k in classes)

    def to_dict(self) -> dict:
        return {
            "e": self.e, "p": self.p, "degrees": list(self.degrees),
            "values": [v.tolist() for v in self.values], "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, d: dict, classes: ClassSet) -> CharacterTable:
        vals = [np.array(v, dtype=np.int64).reshape(len(d["degrees"]), o)
                for v, o in zip(d["values"], classes.orders)]
        return cls(classes, d["e"], d["p"], list(d["degrees"]), vals, d.get("seed", 0))

    # pretty values as complex numbers (display only)
    def complex_values(self) -> np.ndarray:
        out = np.zeros((len(self), len(self.classes)), dtype=complex)
        for k, o in enumerate(self.classes.orders):
            z = np.exp(2j * np.pi * np.arange(o) / o)
            out[:, k] = self.values[k] @ z
        return out


def _split_spaces(mats_order, B_of, r: int, p: int, rng: random.Random):
    """Common eigenvectors (as normalized rows) of the class matrices."""
    finished = []
    queue = [(np.eye(r, dtype=np.int64), list(range(r)), 0)]
    while queue:
        E, piv, pos = queue.pop()
        if E.shape[0] == 1:
            finished.append(E[0])
            continue
        misses = 0
        split = None
        while split is None:
            if misses >= NO_SPLIT_LIMIT and pos < len(mats_order):
                rest = mats_order[pos:]
                coef = [rng.randrange(1, p) for _ in rest]
                B = sum(c * B_of(j) for c, j in zip(coef, rest)) % p
                from_random = True
            elif pos < len(mats_order):
                B = B_of(mats_order[pos])
                pos += 1
                from_random = False
            else:
                raise SplitError("eigenspaces did not split to dimension one")
            R = _matmul_mod(E, B, p)[:, piv]
            roots = _roots_mod(_charpoly_mod(R, p), p)
            if len(roots) > 1:
                split = roots
                break
            misses += 1
            if from_random:
                misses = 0          # fall back to the next matrix in sequence
        for lam in split:
            A = (R - lam * np.eye(len(R), dtype=np.int64)) % p
            Cs = _nullspace_mod(A.T.copy(), p)
            sub = _matmul_mod(Cs, E, p)
            sub, spiv = kernels.rref_mod(sub, p)
            queue.append((np.ascontiguousarray(sub), list(spiv), pos))
    return finished


def character_table(G: PermGroup, *, seed: int = 0) -> CharacterTable:
    cached = G._cache.get(("chartab", seed))
    if cached is not None:
        return cached
    C = conjugacy_classes(G)
    r = len(C)
    if r > CLASS_COUNT_CAP:
        raise CapError(f"{r} classes exceeds the character table cap {CLASS_COUNT_CAP}")
    e = C.exponent
    order = G.order
    p = dixon_prime(order, e)
    if p >= 2**31:
        raise CapError(f"Dixon prime {p} too large for 64-bit arithmetic")
    A = class_matrices(C)
    sizes = np.array(C.sizes, dtype=np.int64)

    def B_of(j):
        # (B_j)[k, i] = a_{ijk}; rows w of central characters satisfy w B_j = omega_j w
        return np.ascontiguousarray(A[:, j, :].T) % p

    mats_order = sorted(range(1, r), key=lambda j: (C.sizes[j], j))
    rng = random.Random(seed)
    vecs = _split_spaces(mats_order, B_of, r, p, rng) if r > 1 else [np.ones(1, dtype=np.int64)]
    if len(vecs) != r:
        raise SplitError(f"found {len(vecs)} central characters for {r} classes")

    inv_map = np.array(C.inverse_map)
    inv_sizes = np.array([pow(int(s), -1, p) for s in sizes], dtype=np.int64)
    degs, modp = [], []
    for v in vecs:
        w = v * pow(int(v[0]), -1, p) % p
        S = int(np.sum(w * w[inv_map] % p * inv_sizes % p) % p)
        d2 = order * pow(S, -1, p) % p
        d = next((d for d in divisors(order) if d * d <= order and d * d % p == d2), None)
        if d is None:
            raise IntegrityError("no degree lifts from GF(p)")
        degs.append(d)
        modp.append(w * d % p * inv_sizes % p)
    modp = np.array(modp, dtype=np.int64)

    z = pow(_primitive_root(p), (p - 1) // e, p)
    values = []
    for k in range(r):
        o = C.orders[k]
        pcs = C.power_classes_of(k)
        zo = pow(z, e // o, p)
        # F[l, m] = zeta_o^{-m l}
        zpow = np.array([pow(zo, t, p) for t in range(o)], dtype=np.int64)
        F = zpow[(-np.outer(np.arange(o), np.arange(o))) % o]
        mu = _matmul_mod(modp[:, pcs], F, p) * pow(o, -1, p) % p
        values.append(mu)

    # canonical row order: degree, then value bytes
    keys = [(degs[i], b"".join(values[k][i].tobytes() for k in range(r))) for i in range(r)]
    order_rows = sorted(range(r), key=lambda i: (keys[i][0], keys[i][0] != 1 or
                                                 not all(values[k][i][0] == 1 for k in range(r)),
                                                 keys[i][1]))
    T = CharacterTable(C, e, p, [degs[i] for i in order_rows],
                       [v[order_rows] for v in values], seed, modp[order_rows])
    _sanity(T)
    G._cache[("chartab", seed)] = T
    return T


def _sanity(T: CharacterTable):
    for k, M in enumerate(T.values):
        if (M < 0).any() or (M > max(T.degrees)).any():
            raise IntegrityError("eigenvalue multiplicities failed to lift")
        if not np.array_equal(M.sum(axis=1), np.array(T.degrees)):
            raise IntegrityError("multiplicities do not sum to the degree")


# ------------------------------------------------------- exact verification

def degree_sum_ok(T: CharacterTable) -> bool:
    return sum(d * d for d in T.degrees) == T.classes.order


_EXACT_FLOAT = 2**52


def _int_matmul(A: np.ndarray, B: np.ndarray, bound: int) -> np.ndarray:
    """Exact integer product; uses BLAS when every partial sum stays below 2^52."""
    if bound < _EXACT_FLOAT:
        return np.rint(A.astype(np.float64) @ B.astype(np.float64)).astype(np.int64)
    return A.astype(np.int64) @ B.astype(np.int64)


def column_orthogonality(T: CharacterTable) -> bool:
    """sum_chi chi(g_i) conj(chi(g_j)) = delta_ij |C_G(g_i)| for all i <= j."""
    C = T.classes
    r = len(C)
    top = max(int(M.max()) for M in T.values) if r else 0
    by_order: dict[int, list[int]] = {}
    for j, o in enumerate(C.orders):
        by_order.setdefault(o, []).append(j)
    for i in range(r):
        oi = C.orders[i]
        Mi = T.values[i]
        for oj, js in by_order.items():
            js = [j for j in js if j >= i]
            if not js:
                continue
            L = math.lcm(oi, oj)
            # (o_i, o_j * n) block of products, then scatter (a, b) -> a L/o_i - b L/o_j
            MJ = np.concatenate([T.values[j] for j in js], axis=1)
            prod = _int_matmul(Mi.T, MJ, len(T) * top * top)
            prod = prod.reshape(oi, len(js), oj).transpose(1, 0, 2).reshape(len(js), oi * oj)
            a, b = np.divmod(np.arange(oi * oj), oj)
            vecs = np.zeros((L, len(js)), dtype=np.int64)
            np.add.at(vecs, (a * (L // oi) - b * (L // oj)) % L, prod.T)
            vecs = vecs.T
            for n, j in enumerate(js):
                if j == i:
                    vecs[n, 0] -= C.centralizer_order(i)
            if reduce_batch(vecs, L).any():
                return False
    return True


def _norm_terms(T: CharacterTable, rows: np.ndarray, other: np.ndarray, k: int) -> np.ndarray:
    """For class k: sum_{a,b} mu_x[a] mu_y[b] zeta^(a-b) as length-o vectors."""
    o = T.classes.orders[k]
    M = T.values[k]
    X, Y = M[rows], M[other]
    # shifted[t, y, a] = mu_y[a - t]
    shifted = Y[:, (np.arange(o)[None, :] - np.arange(o)[:, None]) % o].transpose(1, 0, 2)
    bound = o * int(M.max(initial=0)) ** 2
    flat = _int_matmul(X, shifted.reshape(o * len(other), o).T, bound)
    return flat.reshape(len(rows), o, len(other)).transpose(0, 2, 1)


ROW_CHUNK_CELLS = 1 << 22


def row_orthogonality(T: CharacterTable) -> bool:
    """sum_k |C_k| chi(g_k) conj(psi(g_k)) = delta |G| for all pairs of rows."""
    C = T.classes
    r, e = len(C), T.e
    allrows = np.arange(r)
    chunk = max(1, ROW_CHUNK_CELLS // max(1, r * e))
    for lo in range(0, r, chunk):
        xs = allrows[lo:lo + chunk]
        per_order: dict[int, np.ndarray] = {}
        for k in range(r):
            o = C.orders[k]
            terms = C.sizes[k] * _norm_terms(T, xs, allrows, k)
            if o in per_order:
                per_order[o] += terms
            else:
                per_order[o] = terms
        acc = np.zeros((len(xs), r, e), dtype=np.int64)
        for o, terms in per_order.items():
            acc[:, :, np.arange(o) * (e // o)] += terms
        acc[np.arange(len(xs)), xs, 0] -= C.order
        if reduce_batch(acc.reshape(-1, e), e).any():
            return False
    return True


def real_rational_counts(T: CharacterTable) -> tuple[int, int]:
    """(#real rows, #rational rows); must equal the class-side counts."""
    kr, kq = sum(T.real), sum(T.rational)
    ckr, ckq = T.classes.k_real(), T.classes.k_rational()
    if (kr, kq) != (ckr, ckq):
        raise IntegrityError(f"Brauer equality broken: rows ({kr},{kq}) vs classes ({ckr},{ckq})")
    return kr, kq


def table_checks(T: CharacterTable) -> dict[str, bool]:
    return {
        "rows_equal_classes": len(T) == len(T.classes),
        "degree_sum": degree_sum_ok(T),
        "degrees_divide_order": all(T.classes.order % d == 0 for d in T.degrees),
        "column_orthogonality": column_orthogonality(T),
        "row_orthogonality": row_orthogonality(T),
        "conjugation_permutes_rows": T.galois_row_permutation(-1) is not None,
    }


# ------------------------------------------------------------ paired checks

def fusion(S: PermGroup, A: PermGroup) -> list[int]:
    """Class of A containing each class representative of S (same points)."""
    if S.degree != A.degree or not S.is_subgroup_of(A):
        raise ValueError("S is not a subgroup of A on the same points")
    CS, CA = conjugacy_classes(S), conjugacy_classes(A)
    return [int(c) for c in CA.class_of[A.index_of(CS.reps)]]


@dataclass
class ExtensionWitness:
    row: int
    degree: int
    restricted_values: list[str]


def lemma41_check(S: PermGroup, A: PermGroup, *, seed: int = 0) -> ExtensionWitness | None:
    """A rational row of A whose restriction to S is irreducible and non-principal."""
    TA = character_table(A, seed=seed)
    CS = conjugacy_classes(S)
    fus = fusion(S, A)
    rational = TA.rational
    for row in range(len(TA)):
        if not rational[row]:
            continue
        if TA.kernel_contains(row, fus):
            continue        # restriction is a multiple of the principal character
        # <res, res>_S = 1  <=>  sum_k |C_k^S| |chi(fus k)|^2 = |S|
        acc = np.zeros(TA.e, dtype=np.int64)
        for k, c in enumerate(fus):
            o = TA.classes.orders[c]
            t = _norm_terms(TA, np.array([row]), np.array([row]), c)[0, 0]
            acc[np.arange(o) * (TA.e // o)] += CS.sizes[k] * t
        acc[0] -= S.order
        if not reduce_batch(acc, TA.e).any():
            vals = [str(TA.value(row, c)) for c in fus]
            return ExtensionWitness(row, TA.degrees[row], vals)
    return None


@dataclass
class RealCountSplit:
    k_real_G: int
    k_real_S: int
    k_real_quotient: int
    k_real_G_over_S: int        # rows of G not containing S in the kernel
    out_order: int
    equality: bool
    lower_bound: bool
    quotient_bound: bool

    @property
    def ok(self) -> bool:
        return self.equality and self.lower_bound and self.quotient_bound

    @property
    def K(self) -> Fraction:
        return Fraction(self.k_real_S, self.out_order) - self.out_order


def lemma31_check(S: PermGroup, G: PermGroup, out_order: int, *, seed: int = 0) -> RealCountSplit:
    TG = character_table(G, seed=seed)
    fus = fusion(S, G)
    real = TG.real
    kGS = sum(1 for i in range(len(TG)) if real[i] and not TG.kernel_contains(i, fus))
    Q = coset_action(G, S).image
    kQ = conjugacy_classes(Q).k_real() if Q.order > 1 else 1
    kG = sum(real)
    kS = conjugacy_classes(S).k_real()
    return RealCountSplit(
        kG, kS, kQ, kGS, out_order,
        equality=(kGS == kG - kQ),
        lower_bound=(Fraction(kG) >= Fraction(kS, out_order)),
        quotient_bound=(kQ <= out_order),
    )
