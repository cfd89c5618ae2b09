"""Descriptor -> permutation group, closed-form orders, and the |Out(S)| table."""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from ..algebra import multiplicative_order, prime_power
from ..perm import CapError, PermGroup, direct_product, identity, wreath
from . import builders as B
from .descriptor import Atom, Descriptor, DescriptorError, Product, Term, parse

PROJECTIVE_POINT_CAP = 1024


class UnavailableError(RuntimeError):
    """An optional group whose generator data is not bundled."""


def _nu(q: int) -> int:
    return prime_power(q)[1]


def _simple_atom(a: Atom) -> bool:
    f, p = a.family, a.params
    if f == "A":
        return p[0] >= 5
    if f in ("PSL", "SL"):
        d, q = p
        if f == "SL" and math.gcd(d, q - 1) != 1:
            return False
        return not (d == 2 and q in (2, 3))
    if f == "PSU":
        return p[1] > 2
    return f in ("Sz", "J1")


# ----------------------------------------------------------------- orders

def family_order(node: Descriptor) -> int:
    """Closed-form order for any descriptor."""
    if isinstance(node, Product):
        return math.prod(family_order(f) for f in node.factors)
    if isinstance(node, Term):
        base = family_order(node.base)
        if node.top is not None:
            top = family_order(node.top)
            base = base ** _top_degree(node.top) * top
        return base * (node.ext or 1)
    f, p = node.family, node.params
    if f == "A":
        return max(math.factorial(p[0]) // 2, 1)
    if f == "S":
        return math.factorial(p[0])
    if f == "C":
        return p[0]
    if f == "D":
        return p[0]
    if f == "SL":
        return B.order_sl(*p)
    if f == "PGL":
        return B.order_sl(*p)
    if f == "PSL":
        return B.order_psl(*p)
    if f == "PSU":
        return B.order_psu3(p[1])
    if f == "Sz":
        return B.order_sz(p[0])
    if f == "J1":
        return 175560
    raise DescriptorError(f"no order formula for {node}")


def _top_degree(top: Descriptor) -> int:
    return build(top).group.degree


def out_order(node: Descriptor | str) -> int:
    """|Out(S)| for a tabulated nonabelian simple group S."""
    if isinstance(node, str):
        node = parse(node)
    if not isinstance(node, Atom) or not _simple_atom(node):
        raise DescriptorError(f"{node} is not a tabulated simple group")
    f, p = node.family, node.params
    if f == "A":
        return 4 if p[0] == 6 else 2
    if f in ("PSL", "SL"):
        d, q = p
        if d == 2:
            return math.gcd(2, q - 1) * _nu(q)
        return 2 * math.gcd(d, q - 1) * _nu(q)
    if f == "PSU":
        q = p[1]
        return 2 * math.gcd(3, q + 1) * _nu(q)
    if f == "Sz":
        return _nu(p[0])
    raise DescriptorError(f"|Out| not tabulated for {node}")


def out_order_bounds(node: Descriptor | str) -> list[tuple[str, int]]:
    """Coarse upper bounds that the tabulated value must respect."""
    if isinstance(node, str):
        node = parse(node)
    f, p = node.family, node.params
    if f == "A":
        return [("alternating", 4)]
    if f in ("PSL", "SL", "PSU"):
        d, q = p
        nu = _nu(q)
        return [("2(n+1)nu", 2 * d * nu), ("2(q+1)nu", 2 * (q + 1) * nu)]
    if f == "Sz":
        return [("8nu", 8 * _nu(p[0]))]
    return []


# ------------------------------------------------------------------ build

def _check_points(count: int, name: str):
    if count > PROJECTIVE_POINT_CAP:
        raise CapError(f"{name} needs {count} points (cap {PROJECTIVE_POINT_CAP})")


def _build_atom(a: Atom) -> B.Built:
    f, p = a.family, a.params
    if f == "A":
        return B.Built(B.alternating(p[0]), family="A", params=p)
    if f == "S":
        return B.Built(B.symmetric(p[0]), family="S", params=p)
    if f == "C":
        return B.Built(B.cyclic(p[0]), family="C", params=p)
    if f == "D":
        return B.Built(B.dihedral(p[0]), family="D", params=p)
    if f in ("PSL", "PGL", "SL"):
        d, q = p
        pts = (q**d - 1) // (q - 1)
        if f == "SL" and math.gcd(d, q - 1) != 1:
            pts = q**d - 1
        _check_points(pts, str(a))
        return {"PSL": B.psl, "PGL": B.pgl, "SL": B.sl}[f](d, q)
    if f == "PSU":
        q = p[1]
        _check_points(q**3 + 1, str(a))
        if q == 2:
            raise DescriptorError("PSU(3,2) is solvable and not catalogued")
        return B.psu3(q)
    if f == "Sz":
        return B.suzuki(p[0])
    if f == "J1":
        raise UnavailableError("J1 generator data (degree 266) is not bundled")
    raise DescriptorError(f"cannot build {a}")


def _unit_of_order(m: int, k: int) -> int:
    """Smallest r with r of multiplicative order exactly k mod m, else 1."""
    for r in range(2, m):
        if math.gcd(r, m) == 1 and multiplicative_order(r, m) == k:
            return r
    return 1


def _outer_automorphism(b: B.Built, k: int) -> np.ndarray | None:
    """Catalog-defined automorphism of order dividing k (None if undefined)."""
    fam, params = b.family, b.params
    G = b.group
    if fam == "C":
        m = params[0]
        r = _unit_of_order(m, k)
        return (np.arange(m) * r) % m
    if fam in ("PSL", "PGL", "PSU", "Sz") and b.frobenius is not None:
        nu = _nu(params[-1]) * (2 if fam == "PSU" else 1)
        if nu % k == 0:
            phi = identity(G.degree)
            for _ in range(nu // k):
                phi = b.frobenius[phi]
            return phi
    return None


def _build_ext(base_node, k: int) -> B.Built:
    base = build(base_node)
    if k == 1:
        return B.Built(PermGroup(base.group.generators, base.group.degree),
                       normal=dict(base.normal), frobenius=base.frobenius,
                       family=base.family, params=base.params)
    if isinstance(base_node, Atom):
        f, p = base_node.family, base_node.params
        if f == "A" and k == 2 and p[0] >= 2:
            G = B.symmetric(p[0])
            return B.Built(G, normal={"base": base.group}, family="Aext", params=p)
        if f in ("PSL", "PSU", "Sz") and base.frobenius is not None:
            nu = _nu(p[-1]) * (2 if f == "PSU" else 1)
            if nu % k == 0:
                return B.field_extension(base, k)
        if f == "PSL" and p[0] == 2 and p[1] % 2 == 1 and k == 2:
            pg = B.pgl(2, p[1])
            return B.Built(pg.group, normal={"base": base.group}, family="PSLext", params=p)
        raise DescriptorError(f"extension {base_node}.{k} is not defined in the catalog")
    if isinstance(base_node, Product):
        # each factor gets its catalog automorphism; they act simultaneously
        parts, offset, extra = [], 0, []
        for fnode in base_node.factors:
            fb = build(fnode)
            phi = _outer_automorphism(fb, k) if isinstance(fnode, Atom) else None
            if phi is None:
                phi = identity(fb.group.degree)
            extra.append(phi + offset)
            offset += fb.group.degree
        ext = np.concatenate(extra)
        G = PermGroup(list(base.group.generators) + [ext], base.group.degree)
        if G.order != base.group.order * k:
            raise DescriptorError(f"extension ({base_node}).{k} is not defined in the catalog")
        return B.Built(G, normal={"base": base.group, **base.normal})
    raise DescriptorError(f"extension of {base_node} is not defined in the catalog")


@lru_cache(maxsize=64)
def _build_cached(text: str) -> B.Built:
    node = parse(text)
    if isinstance(node, Atom):
        b = _build_atom(node)
    elif isinstance(node, Product):
        groups = [build(f).group for f in node.factors]
        G = groups[0]
        normal, offset = {}, 0
        for i, H in enumerate(groups):
            if i:
                G = direct_product(G, H)
            normal[f"factor{i}"] = H
        # embed factors into the product's points
        emb = {}
        for i, H in enumerate(groups):
            gens = []
            for g in H.generators:
                full = identity(G.degree)
                full[offset:offset + H.degree] = g + offset
                gens.append(full)
            emb[f"factor{i}"] = PermGroup(gens, G.degree)
            offset += H.degree
        b = B.Built(G, normal=emb)
    else:
        if node.top is not None:
            A = build(node.base).group
            top = build(node.top).group
            W = wreath(A, top)
            inner = B.Built(W)
            if node.ext is None:
                b = inner
            else:
                raise DescriptorError(f"extension of a wreath product is not defined: {node}")
        else:
            b = _build_ext(node.base, node.ext)
    expected = family_order(node)
    if b.group.order != expected:
        raise AssertionError(f"{node}: built order {b.group.order} != {expected}")  # pragma: no cover
    b.group.name = str(node)
    return b


def build(node: Descriptor | str) -> B.Built:
    text = str(parse(node)) if isinstance(node, str) else str(node)
    return _build_cached(text)


def build_group(node: Descriptor | str) -> PermGroup:
    return build(node).group
