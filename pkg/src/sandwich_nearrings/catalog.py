"""Named small groups, one per isomorphism class up to order 12."""

from __future__ import annotations

import itertools

from .groups import FiniteGroup, cyclic, direct_product, from_elements, generate_elements


def klein() -> FiniteGroup:
    g = direct_product(cyclic(2), cyclic(2))
    g.name = "Z2xZ2"
    return g


def _semidirect_inversion(n: int, m: int, name: str) -> FiniteGroup:
    """Z_n x| Z_m with the generator of Z_m acting by inversion (m even)."""
    elems = [(a, b) for b in range(m) for a in range(n)]

    def op(x, y):
        a1, b1 = x
        a2, b2 = y
        return ((a1 + (a2 if b1 % 2 == 0 else -a2)) % n, (b1 + b2) % m)

    return from_elements(elems, op, name=name)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n."""
    return _semidirect_inversion(n, 2, f"D{n}")


def dicyclic3() -> FiniteGroup:
    return _semidirect_inversion(3, 4, "Dic3")


def symmetric3() -> FiniteGroup:
    g = dihedral(3)
    g.name = "S3"
    return g


def quaternion() -> FiniteGroup:
    """Q8 as the unit quaternions ±1, ±i, ±j, ±k."""

    def qmul(p, q):
        a1, b1, c1, d1 = p
        a2, b2, c2, d2 = q
        return (
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    elems = generate_elements([(0, 1, 0, 0), (0, 0, 1, 0)], qmul, (1, 0, 0, 0))
    return from_elements(elems, qmul, name="Q8")


def alternating4() -> FiniteGroup:
    def compose(p, q):
        return tuple(p[q[i]] for i in range(4))

    def even(p):
        return sum(1 for i, j in itertools.combinations(range(4), 2) if p[i] > p[j]) % 2 == 0

    elems = [p for p in itertools.permutations(range(4)) if even(p)]
    return from_elements(elems, compose, name="A4")


def _named_product(g, h, name):
    p = direct_product(g, h)
    p.name = name
    return p


def small_groups(max_order: int = 8, cyclic_only: bool = False) -> list[FiniteGroup]:
    """Every group of order <= max_order up to isomorphism (complete up to 12)."""
    out = []
    for n in range(1, max_order + 1):
        out.append(cyclic(n))
        if cyclic_only:
            continue
        if n == 4:
            out.append(klein())
        elif n == 6:
            out.append(symmetric3())
        elif n == 8:
            out.append(_named_product(cyclic(2), cyclic(4), "Z2xZ4"))
            out.append(_named_product(klein(), cyclic(2), "Z2xZ2xZ2"))
            out.append(dihedral(4))
            out.append(quaternion())
        elif n == 9:
            out.append(_named_product(cyclic(3), cyclic(3), "Z3xZ3"))
        elif n == 10:
            out.append(dihedral(5))
        elif n == 12:
            out.append(_named_product(cyclic(2), cyclic(6), "Z2xZ6"))
            out.append(dihedral(6))
            out.append(alternating4())
            out.append(dicyclic3())
    return out
