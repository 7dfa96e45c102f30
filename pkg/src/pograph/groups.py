"""Finite groups as dense Cayley tables.

Every constructor places the identity at index 0 and attaches a readable
label to each element. Group queries (orders, exponent, prime-order set,
subgroup closure, targeted subgroup tests) work directly on the table.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import cached_property, lru_cache

import numpy as np

from . import grammar
from .grammar import GroupSpecError

__all__ = [
    "MAX_GROUP_ORDER",
    "GroupSpecError",
    "Group",
    "ElementTable",
    "build",
    "element_order",
    "prime_order_set",
    "closure",
    "is_eppo",
    "exponent",
    "has_Z8_subgroup",
    "has_D4_subgroup",
    "s_product_condition",
    "is_prime",
    "prime_factors",
]

MAX_GROUP_ORDER = 4096


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> dict[int, int]:
    """Trial-division factorization as ``{prime: multiplicity}``."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class ElementTable:
    orders: tuple[int, ...]
    S: frozenset[int]
    exponent: int
    S_closure: frozenset[int]


@dataclass(frozen=True, eq=False)
class Group:
    """A finite group on indices ``0..n-1`` with an explicit Cayley table.

    Attributes
    ----------
    n : int
        Group order.
    table : numpy.ndarray
        ``table[x, y]`` is the index of ``x*y``.
    identity : int
        Index of the identity (0 for every built-in constructor).
    inverse : numpy.ndarray
        ``inverse[x]`` is the index of ``x^-1``.
    labels : tuple of str
        Display label for each element.
    family : str
        Normalized constructor expression.
    """

    n: int
    table: np.ndarray = field(repr=False)
    identity: int
    inverse: np.ndarray = field(repr=False)
    labels: tuple[str, ...] = field(repr=False)
    family: str

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inv(self, x: int) -> int:
        return int(self.inverse[x])

    def index(self, label: str) -> int:
        """Element index for a display label."""
        try:
            return self._label_index[label]
        except KeyError:
            raise KeyError(f"{label!r} is not an element label of {self.family}") from None

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def orders(self) -> np.ndarray:
        """Vectorized element orders; agrees with :func:`element_order`."""
        n, e = self.n, self.identity
        ar = np.arange(n)
        out = np.zeros(n, dtype=np.int64)
        cur = ar.copy()
        k = 1
        while True:
            hit = (cur == e) & (out == 0)
            out[hit] = k
            if out.all():
                return out
            cur = self.table[cur, ar]
            k += 1

    @cached_property
    def element_table(self) -> ElementTable:
        orders = tuple(int(o) for o in self.orders)
        S = frozenset(i for i, o in enumerate(orders) if is_prime(o))
        exp = math.lcm(*orders) if orders else 1
        return ElementTable(orders, S, exp, closure(self, S))

    @property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def __repr__(self) -> str:
        return f"Group({self.family!r}, n={self.n})"


def _make(table, labels, family: str) -> Group:
    table = np.ascontiguousarray(table, dtype=np.int32)
    n = table.shape[0]
    labels = tuple(labels)
    if len(set(labels)) != n:
        raise AssertionError(f"duplicate element labels in {family}")
    # identity is 0 by construction; inverses read off row 0 hits
    rows, cols = np.nonzero(table == 0)
    inverse = np.empty(n, dtype=np.int32)
    inverse[rows] = cols
    table.setflags(write=False)
    inverse.setflags(write=False)
    return Group(n, table, 0, inverse, labels, family)


# element orders and queries -------------------------------------------------


def element_order(G: Group, x: int) -> int:
    """Least ``k >= 1`` with ``x^k = e``, by repeated multiplication."""
    if not 0 <= x < G.n:
        raise IndexError(f"element index {x} out of range for order {G.n}")
    k, cur = 1, x
    while cur != G.identity:
        cur = G.mul(cur, x)
        k += 1
    return k


def prime_order_set(G: Group) -> frozenset[int]:
    return G.element_table.S


def closure(G: Group, gens) -> frozenset[int]:
    """Subgroup generated by ``gens`` (breadth-first over right products)."""
    gens = sorted(set(int(g) for g in gens))
    for g in gens:
        if not 0 <= g < G.n:
            raise IndexError(f"element index {g} out of range for order {G.n}")
    seen = {G.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = G.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def exponent(G: Group) -> int:
    return G.element_table.exponent


def _is_prime_power(k: int) -> bool:
    return len(prime_factors(k)) == 1


def is_eppo(G: Group) -> bool:
    """True iff every non-identity element has prime-power order."""
    return all(_is_prime_power(o) for o in G.element_table.orders if o > 1)


def has_Z8_subgroup(G: Group) -> bool:
    return bool((G.orders == 8).any())


def has_D4_subgroup(G: Group) -> bool:
    """Is there ``a`` of order 4 and an involution ``b`` outside <a> with ``bab^-1 = a^-1``?"""
    orders = G.orders
    fours = np.flatnonzero(orders == 4)
    twos = np.flatnonzero(orders == 2)
    if len(fours) == 0 or len(twos) == 0:
        return False
    T, inv = G.table, G.inverse
    for a in fours:
        a2 = T[a, a]
        cyc = {G.identity, int(a), int(a2), int(T[a2, a])}
        # b a b^-1 == a^-1  <=>  b a == a^-1 b
        for b in twos:
            if int(b) not in cyc and T[b, a] == T[inv[a], b]:
                return True
    return False


def s_product_condition(G: Group) -> bool:
    """For a p-group: does every product of two order-p elements have order 1 or p?"""
    primes = prime_factors(G.n)
    if len(primes) != 1:
        raise ValueError(f"{G.family} is not a p-group (order {G.n})")
    (p,) = primes
    S = np.flatnonzero(G.orders == p)
    if len(S) == 0:
        return True
    prods = G.orders[G.table[np.ix_(S, S)]]
    return bool(np.isin(prods, (1, p)).all())


# constructors -----------------------------------------------------------------


def _word(parts) -> str:
    """Render ``[(symbol, exponent), ...]`` as ``a^2·b``; the empty word is ``e``."""
    pieces = []
    for sym, k in parts:
        if k == 0:
            continue
        pieces.append(sym if k == 1 else f"{sym}^{k}")
    return "·".join(pieces) or "e"


def _cyclic(n: int) -> Group:
    ar = np.arange(n)
    return _make((ar[:, None] + ar[None, :]) % n, [str(k) for k in range(n)], f"C:{n}")


def _dihedral(n: int) -> Group:
    # index i -> a^i, index n+i -> a^i·b ; b a = a^-1 b
    r = np.arange(n)
    i, j = r[:, None], r[None, :]
    rot_rot = (i + j) % n
    rot_ref = (i + j) % n + n
    ref_rot = (i - j) % n + n
    ref_ref = (i - j) % n
    table = np.block([[rot_rot, rot_ref], [ref_rot, ref_ref]])
    labels = [_word([("a", k)]) for k in range(n)] + [_word([("a", k), ("b", 1)]) for k in range(n)]
    return _make(table, labels, f"D:{n}")


def _quaternion(order: int) -> Group:
    # a of order m = order/2, b^2 = a^(m/2), b a b^-1 = a^-1
    m = order // 2
    r = np.arange(m)
    i, j = r[:, None], r[None, :]
    table = np.block(
        [[(i + j) % m, (i + j) % m + m], [(i - j) % m + m, (i - j + m // 2) % m]]
    )
    labels = [_word([("a", k)]) for k in range(m)] + [_word([("a", k), ("b", 1)]) for k in range(m)]
    return _make(table, labels, f"Q:{order}")


def _cycle_label(perm: tuple[int, ...]) -> str:
    seen, cycles = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = perm[x]
        cycles.append("(" + " ".join(cyc) + ")")
    return "".join(cycles) or "e"


def _perm_parity(perm) -> int:
    inversions = sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])
    return inversions % 2


def _permutation_group(perms: list[tuple[int, ...]], family: str) -> Group:
    """Permutations multiply left to right: ``x*y`` applies ``x`` first."""
    P = np.array(perms, dtype=np.int64).reshape(len(perms), -1)
    N, d = P.shape
    weights = d ** np.arange(d)
    codes = P @ weights
    lookup = {int(c): k for k, c in enumerate(codes)}
    # composite[x, y, i] = y(x(i))
    comp = P[np.arange(N)[None, :, None], P[:, None, :]]
    comp_codes = comp @ weights
    table = np.vectorize(lookup.__getitem__, otypes=[np.int64])(comp_codes)
    return _make(table, [_cycle_label(p) for p in perms], family)


def _symmetric(n: int, alternating: bool = False) -> Group:
    perms = list(itertools.permutations(range(n)))  # identity first, then lexicographic
    if alternating:
        perms = [p for p in perms if _perm_parity(p) == 0]
    return _permutation_group(perms, f"{'A' if alternating else 'S'}:{n}")


def _matrix_label(m) -> str:
    a, b, c, d = (int(v) for v in m)
    return f"[{a},{b};{c},{d}]"


def _matrix_group(p: int, kind: str) -> Group:
    entries = np.array(list(itertools.product(range(p), repeat=4)), dtype=np.int64)
    det = (entries[:, 0] * entries[:, 3] - entries[:, 1] * entries[:, 2]) % p
    if kind == "GL":
        mats = entries[det != 0]
    else:
        mats = entries[det == 1]
    if kind == "PSL" and p > 2:
        first_nz = np.array([row[np.flatnonzero(row)[0]] for row in mats])
        keep = first_nz <= (p - 1) // 2
        mats = mats[keep]
    # identity first, the rest in lexicographic entry order
    ident = np.array([1, 0, 0, 1])
    is_id = (mats == ident).all(axis=1)
    mats = np.concatenate([mats[is_id], mats[~is_id]])
    n = len(mats)
    weights = np.array([p**3, p**2, p, 1])
    lookup = np.full(p**4, -1, dtype=np.int64)
    lookup[mats @ weights] = np.arange(n)
    A, B = mats[:, None, :], mats[None, :, :]
    prod = np.stack(
        [
            A[..., 0] * B[..., 0] + A[..., 1] * B[..., 2],
            A[..., 0] * B[..., 1] + A[..., 1] * B[..., 3],
            A[..., 2] * B[..., 0] + A[..., 3] * B[..., 2],
            A[..., 2] * B[..., 1] + A[..., 3] * B[..., 3],
        ],
        axis=-1,
    ) % p
    if kind == "PSL" and p > 2:
        prod = _psl_canonical(prod, p)
    table = lookup[prod @ weights]
    if (table < 0).any():
        raise AssertionError("matrix product left the group")
    return _make(table, [_matrix_label(m) for m in mats], f"{kind}:2:{p}")


def _psl_canonical(mats: np.ndarray, p: int) -> np.ndarray:
    """Pick the representative of ``{M, -M}`` whose first nonzero entry is at most (p-1)/2."""
    nz = mats != 0
    first_idx = nz.argmax(axis=-1)
    first = np.take_along_axis(mats, first_idx[..., None], axis=-1)[..., 0]
    flip = first > (p - 1) // 2
    return np.where(flip[..., None], (-mats) % p, mats)


def _direct_product(groups: list[Group]) -> Group:
    table = groups[0].table.astype(np.int64)
    labels = [[lab] for lab in groups[0].labels]
    for H in groups[1:]:
        n1, n2 = table.shape[0], H.n
        T2 = H.table.astype(np.int64)
        table = (table[:, None, :, None] * n2 + T2[None, :, None, :]).reshape(n1 * n2, n1 * n2)
        labels = [parts + [lab] for parts in labels for lab in H.labels]
    family = " x ".join(_wrap(G.family) for G in groups)
    return _make(table, ["(" + ",".join(parts) + ")" for parts in labels], family)


def _wrap(family: str) -> str:
    return f"({family})" if " x " in family else family


def _semidirect_cyclic(n: int, m: int, k: int) -> Group:
    """Z_n ⋊ Z_m with the generator y of Z_m acting by x -> x^k."""
    if math.gcd(k, n) != 1:
        raise GroupSpecError(f"SD:{n}:{m}:{k}: gcd(k, n) must be 1")
    if pow(k, m, n) != 1 % n:
        raise GroupSpecError(f"SD:{n}:{m}:{k}: k^m must be 1 mod n")
    kpow = np.array([pow(k, s, n) for s in range(m)], dtype=np.int64)
    idx = np.arange(n * m)
    xs, ys = idx // m, idx % m
    x1, y1 = xs[:, None], ys[:, None]
    x2, y2 = xs[None, :], ys[None, :]
    table = ((x1 + kpow[y1] * x2) % n) * m + (y1 + y2) % m
    labels = [_word([("x", int(x)), ("y", int(y))]) for x, y in zip(xs, ys)]
    return _make(table, labels, f"SD:{n}:{m}:{k}")


def _extension_by_cyclic(A: Group, m: int, auto: np.ndarray, family: str, sym: str) -> Group:
    """A ⋊ Z_m where the generator t acts on A by the permutation ``auto``."""
    nA = A.n
    powers = [np.arange(nA)]
    for _ in range(m - 1):
        powers.append(auto[powers[-1]])
    powers = np.array(powers)  # powers[s][a] = auto^s(a)
    idx = np.arange(nA * m)
    a, s = idx // m, idx % m
    a1, s1 = a[:, None], s[:, None]
    a2, s2 = a[None, :], s[None, :]
    table = A.table[a1, powers[s1, a2]].astype(np.int64) * m + (s1 + s2) % m
    labels = []
    for ai, si in zip(a, s):
        base = A.labels[ai]
        if si == 0:
            labels.append(base)
        else:
            labels.append(f"{base}·{_word([(sym, int(si))])}")
    return _make(table, labels, family)


def _generalized_dihedral(A: Group) -> Group:
    if not A.is_abelian:
        raise GroupSpecError(f"GD requires an abelian group, got {A.family}")
    return _extension_by_cyclic(A, 2, A.inverse.astype(np.int64), f"GD:({A.family})", "t")


def _matrix_semidirect(A: Group, moduli: list[int], m: int, matrix) -> Group:
    r = len(moduli)
    M = np.array(matrix, dtype=np.int64)
    if M.shape != (r, r):
        raise GroupSpecError(f"SDM matrix must be {r}x{r} for a product of {r} cyclic factors")
    mods = np.array(moduli, dtype=np.int64)
    for j in range(r):
        if ((mods[j] * M[:, j]) % mods != 0).any():
            raise GroupSpecError(f"SDM matrix column {j} does not define a homomorphism")
    # A is C:n1 x ... x C:nr with mixed-radix element indices
    coords = np.array(list(itertools.product(*(range(q) for q in moduli))), dtype=np.int64).reshape(-1, r)
    images = (coords @ M.T) % mods
    radix = np.array([int(np.prod(mods[j + 1 :])) for j in range(r)], dtype=np.int64)
    auto = images @ radix
    if len(np.unique(auto)) != A.n:
        raise GroupSpecError("SDM matrix is not an automorphism (not bijective)")
    cur = np.arange(A.n)
    for _ in range(m):
        cur = auto[cur]
    if not np.array_equal(cur, np.arange(A.n)):
        raise GroupSpecError(f"SDM matrix order does not divide {m}")
    rows = ";".join(",".join(str(v) for v in row) for row in matrix)
    return _extension_by_cyclic(A, m, auto, f"SDM:({A.family}):{m}:[{rows}]", "t")


# evaluation of parsed expressions ---------------------------------------------


def _order_of(node) -> int:
    """Group order predicted from the syntax tree, without building anything."""
    if isinstance(node, grammar.Atom):
        k, (v, *rest) = node.kind, node.params
        if k == "C":
            return v
        if k in ("D", "Q"):
            return 2 * v if k == "D" else v
        if k in ("S", "A"):
            f = math.factorial(v)
            return f if k == "S" or v < 2 else f // 2
        if k == "GL":
            return (v * v - 1) * (v * v - v)
        if k == "SL":
            return v * (v * v - 1)
        if k == "PSL":
            return v * (v * v - 1) // (2 if v > 2 else 1)
        if k == "SD":
            return v * rest[0]
    if isinstance(node, grammar.Product):
        return math.prod(_order_of(f) for f in node.factors)
    if isinstance(node, grammar.Power):
        return _order_of(node.base) ** node.exponent
    if isinstance(node, grammar.GeneralizedDihedral):
        return 2 * _order_of(node.base)
    if isinstance(node, grammar.MatrixSemidirect):
        return node.m * _order_of(node.base)
    raise TypeError(node)


def _flatten(node) -> list:
    if isinstance(node, grammar.Product):
        return [leaf for f in node.factors for leaf in _flatten(f)]
    if isinstance(node, grammar.Power):
        return _flatten(node.base) * node.exponent
    return [node]


def _cyclic_moduli(node) -> list[int]:
    moduli = []
    for leaf in _flatten(node):
        if not (isinstance(leaf, grammar.Atom) and leaf.kind == "C"):
            raise GroupSpecError("SDM base must be a direct product of cyclic groups")
        moduli.append(leaf.params[0])
    return moduli


def _build_atom(node: grammar.Atom) -> Group:
    k, params = node.kind, node.params
    v = params[0]
    if k == "C":
        if v < 1:
            raise GroupSpecError("C:n requires n >= 1")
        return _cyclic(v)
    if k == "D":
        if v < 1:
            raise GroupSpecError("D:n requires n >= 1")
        return _dihedral(v)
    if k == "Q":
        if v < 8 or v & (v - 1):
            raise GroupSpecError("Q requires order 2^k with k >= 3")
        return _quaternion(v)
    if k in ("S", "A"):
        if v < 1:
            raise GroupSpecError(f"{k}:n requires n >= 1")
        return _symmetric(v, alternating=(k == "A"))
    if k in ("GL", "SL", "PSL"):
        if not is_prime(v):
            raise GroupSpecError(f"{k}:2:{v}: {v} is not prime")
        return _matrix_group(v, k)
    if k == "SD":
        n, m, kk = params
        if n < 1 or m < 1:
            raise GroupSpecError("SD:n:m:k requires n, m >= 1")
        return _semidirect_cyclic(n, m, kk % n if n > 1 else 0)
    raise GroupSpecError(f"unknown constructor {k}")


def _evaluate(node) -> Group:
    if isinstance(node, grammar.Atom):
        return _build_atom(node)
    if isinstance(node, (grammar.Product, grammar.Power)):
        leaves = _flatten(node)
        if len(leaves) == 1:
            return _evaluate(leaves[0])
        return _direct_product([_evaluate(leaf) for leaf in leaves])
    if isinstance(node, grammar.GeneralizedDihedral):
        return _generalized_dihedral(_evaluate(node.base))
    if isinstance(node, grammar.MatrixSemidirect):
        if node.m < 1:
            raise GroupSpecError("SDM cyclic order must be >= 1")
        moduli = _cyclic_moduli(node.base)
        return _matrix_semidirect(_evaluate(node.base), moduli, node.m, node.matrix)
    raise TypeError(node)


def build(spec: str, max_order: int = MAX_GROUP_ORDER) -> Group:
    """Construct a group from an expression such as ``"C:2 x SD:7:3:2"``.

    Raises
    ------
    GroupSpecError
        On syntax errors, invalid parameters, or an order above ``max_order``.
    """
    return _build_cached(spec, max_order)


@lru_cache(maxsize=512)
def _build_cached(spec: str, max_order: int) -> Group:
    node = grammar.parse(spec)
    order = _order_of(node)
    if order > max_order:
        raise GroupSpecError(f"group order {order} exceeds the cap {max_order}")
    return _evaluate(node)
