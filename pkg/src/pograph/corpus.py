"""Enumeration of constructible groups, grouped into named families.

Every family yields group expressions (strings accepted by
:func:`pograph.groups.build`) whose order is at most ``max_order``.
Families are exhaustive within their declared parameter ranges but do
not attempt to remove isomorphic duplicates across families.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

from .groups import prime_factors

__all__ = ["FAMILIES", "family", "corpus", "abelian_groups", "order_of_spec"]


def _partitions(k: int, largest: int | None = None):
    largest = k if largest is None else largest
    if k == 0:
        yield ()
        return
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first):
            yield (first,) + rest


def _abelian_of_order(n: int) -> list[str]:
    """One expression per isomorphism class, as products of cyclic prime powers."""
    if n == 1:
        return ["C:1"]
    per_prime = []
    for p, k in sorted(prime_factors(n).items()):
        per_prime.append([[p**e for e in part] for part in _partitions(k)])
    out = []
    for choice in itertools.product(*per_prime):
        factors = [q for part in choice for q in part]
        out.append(" x ".join(f"C:{q}" for q in factors))
    return out


def abelian_groups(max_order: int, min_order: int = 1) -> list[str]:
    return [s for n in range(min_order, max_order + 1) for s in _abelian_of_order(n)]


def _dihedral(max_order):
    return [f"D:{n}" for n in range(3, max_order // 2 + 1)]


def _quaternion(max_order):
    out, q = [], 8
    while q <= max_order:
        out.append(f"Q:{q}")
        q *= 2
    return out


def _symmetric(max_order):
    return [f"S:{n}" for n in range(3, 6) if math.factorial(n) <= max_order]


def _alternating(max_order):
    return [f"A:{n}" for n in range(4, 7) if math.factorial(n) // 2 <= max_order]


def _unit_order(k: int, n: int) -> int:
    r, x = 1, k % n
    while x != 1:
        x = x * k % n
        r += 1
    return r


def _semidirect(max_order):
    """Z_n ⋊ Z_m for every nontrivial cyclic subgroup <k> of units mod n with ord(k) | m."""
    out = []
    for n in range(3, max_order // 2 + 1):
        units = [k for k in range(2, n) if math.gcd(k, n) == 1]
        seen_subgroups = set()
        reps = []
        for k in units:
            d = _unit_order(k, n)
            sub = frozenset(pow(k, j, n) for j in range(d))
            if sub not in seen_subgroups:
                seen_subgroups.add(sub)
                reps.append((k, d))
        for m in range(2, max_order // n + 1):
            for k, d in reps:
                if m % d == 0:
                    out.append(f"SD:{n}:{m}:{k}")
    return out


def _generalized_dihedral(max_order):
    out = []
    for s in abelian_groups(max_order // 2, min_order=3):
        factors = s.split(" x ")
        if len(factors) == 1:
            continue  # GD of a cyclic group is dihedral
        if all(f == "C:2" for f in factors):
            continue  # elementary abelian: inversion is trivial
        out.append(f"GD:({s})")
    return out


_SMALL_NONABELIAN = ("D:3", "D:4", "D:5", "D:6", "Q:8", "Q:16", "A:4", "SL:2:3", "SD:7:3:2", "S:4", "D:8")


def _mixed_products(max_order):
    """Small non-abelian groups times abelian groups."""
    out = []
    for X in _SMALL_NONABELIAN:
        nx_ = order_of_spec(X)
        for A in abelian_groups(max_order // nx_, min_order=2):
            out.append(f"{X} x {A}")
    return out


def _matrix(max_order):
    specs = ["SL:2:3", "GL:2:3", "PSL:2:5", "SL:2:5", "PSL:2:7", "SL:2:7", "GL:2:5", "PSL:2:11"]
    return [s for s in specs if order_of_spec(s) <= max_order]


def _matrix_semidirect(max_order):
    specs = [
        "SDM:(C:2 x C:2):3:[0,1;1,1]",
        "SDM:(C:3 x C:3):2:[-1,0;0,-1]",
        "SDM:(C:3 x C:3):4:[0,-1;1,0]",
        "SDM:(C:4 x C:4):3:[0,-1;1,-1]",
        "SDM:(C:2 x C:2 x C:2):7:[0,0,1;1,0,1;0,1,0]",
        "SDM:(C:5 x C:5):3:[0,-1;1,-1]",
        "SDM:(C:2 x C:2 x C:2 x C:2):5:[0,0,0,1;1,0,0,1;0,1,0,1;0,0,1,1]",
    ]
    return [s for s in specs if order_of_spec(s) <= max_order]


FAMILIES = {
    "abelian": abelian_groups,
    "dihedral": _dihedral,
    "quaternion": _quaternion,
    "symmetric": _symmetric,
    "alternating": _alternating,
    "semidirect": _semidirect,
    "generalized-dihedral": _generalized_dihedral,
    "mixed-products": _mixed_products,
    "matrix": _matrix,
    "matrix-semidirect": _matrix_semidirect,
}


@lru_cache(maxsize=None)
def order_of_spec(spec: str) -> int:
    from . import grammar
    from .groups import _order_of

    return _order_of(grammar.parse(spec))


def family(name: str, max_order: int) -> list[str]:
    """Expressions in one family, or in a derived filter family.

    Derived names: ``corpus`` (everything), ``p-groups``, ``2-groups``,
    ``3-groups``, ``odd-p-groups``, ``odd-order``, ``abelian-2-groups``.
    """
    if name in FAMILIES:
        return sorted(set(FAMILIES[name](max_order)), key=lambda s: (order_of_spec(s), s))
    if name == "corpus":
        return corpus(max_order)
    filters = {
        "p-groups": lambda n: len(prime_factors(n)) == 1,
        "2-groups": lambda n: n > 1 and n & (n - 1) == 0,
        "3-groups": lambda n: set(prime_factors(n)) == {3},
        "odd-p-groups": lambda n: len(prime_factors(n)) == 1 and n % 2 == 1,
        "odd-order": lambda n: n % 2 == 1,
    }
    if name in filters:
        keep = filters[name]
        return [s for s in corpus(max_order) if keep(order_of_spec(s))]
    if name == "abelian-2-groups":
        return [s for s in family("abelian", max_order) if order_of_spec(s) & (order_of_spec(s) - 1) == 0]
    raise KeyError(f"unknown family {name!r}")


@lru_cache(maxsize=8)
def _corpus(max_order: int) -> tuple[str, ...]:
    specs = set()
    for gen in FAMILIES.values():
        specs.update(gen(max_order))
    return tuple(sorted(specs, key=lambda s: (order_of_spec(s), s)))


def corpus(max_order: int) -> list[str]:
    """All constructible groups of order at most ``max_order``, smallest first."""
    if max_order < 1:
        return []
    return list(_corpus(max_order))
