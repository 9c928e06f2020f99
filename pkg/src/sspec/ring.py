"""Finite commutative rings given by explicit operation tables.

Elements are the integers ``0..n-1`` and the additive identity is always
element ``0``.  Every constructor goes through :class:`FiniteRing`, which
validates the ring axioms exhaustively before handing out an instance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import product as cartesian
from pathlib import Path
from typing import Any, Iterable, Sequence

import numpy as np

from .errors import CapacityError, InvalidParameterError, RingValidationError

DEFAULT_SIZE_CAP = 64
DEFAULT_MORPHISM_CAP = 16


def _first_violation(ok: np.ndarray) -> tuple[int, ...] | None:
    bad = np.argwhere(~ok)
    if len(bad) == 0:
        return None
    return tuple(int(x) for x in bad[0])


def validate_tables(add: np.ndarray, mul: np.ndarray, one: int) -> None:
    """Raise :class:`RingValidationError` unless the tables form a commutative
    ring with identity ``one`` and zero ``0``.  Cost is O(n^3)."""
    n = add.shape[0]
    A, M = add, mul
    idx = np.arange(n)
    if not np.all(A[0] == idx):
        a = int(np.flatnonzero(A[0] != idx)[0])
        raise RingValidationError("additive identity", (0, a))
    if one == 0:
        raise RingValidationError("zero != one", (0, one))
    w = _first_violation(A == A.T)
    if w:
        raise RingValidationError("additive commutativity", w)
    # A[A][a, b, c] = (a+b)+c ;  A[:, A][a, b, c] = a+(b+c)
    w = _first_violation(A[A] == A[:, A])
    if w:
        raise RingValidationError("additive associativity", w)
    has_inverse = (A == 0).any(axis=1)
    if not has_inverse.all():
        raise RingValidationError("additive inverse", (int(np.flatnonzero(~has_inverse)[0]),))
    w = _first_violation(M == M.T)
    if w:
        raise RingValidationError("multiplicative commutativity", w)
    if not np.all(M[one] == idx):
        a = int(np.flatnonzero(M[one] != idx)[0])
        raise RingValidationError("multiplicative identity", (one, a))
    w = _first_violation(M[M] == M[:, M])
    if w:
        raise RingValidationError("multiplicative associativity", w)
    # a(b+c) == ab + ac
    left = M[:, A]
    right = A[M[:, :, None], M[:, None, :]]
    w = _first_violation(left == right)
    if w:
        raise RingValidationError("distributivity", w)


class FiniteRing:
    """A finite commutative ring with identity.

    ``add_table`` and ``mul_table`` are read-only ``(n, n)`` integer arrays.
    ``description`` is the JSON object the ring was built from; it is what
    reports and counterexample payloads carry around.
    """

    def __init__(self, add, mul, one: int, description: dict | None = None,
                 *, validate: bool = True):
        add = np.array(add, dtype=np.int64)
        mul = np.array(mul, dtype=np.int64)
        if add.ndim != 2 or add.shape[0] != add.shape[1] or add.shape != mul.shape:
            raise InvalidParameterError("operation tables must both be n x n")
        n = add.shape[0]
        if n < 2:
            raise InvalidParameterError("a ring with 1 != 0 has at least two elements")
        if not (0 <= one < n):
            raise InvalidParameterError(f"one={one} is not an element index")
        if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
            raise InvalidParameterError("table entries must lie in 0..n-1")
        if validate:
            validate_tables(add, mul, one)
        add.setflags(write=False)
        mul.setflags(write=False)
        self.size = n
        self.zero = 0
        self.one = int(one)
        self.add_table = add
        self.mul_table = mul
        # plain nested tuples are much faster than numpy scalars in tight loops
        self.add_rows: tuple[tuple[int, ...], ...] = tuple(map(tuple, add.tolist()))
        self.mul_rows: tuple[tuple[int, ...], ...] = tuple(map(tuple, mul.tolist()))
        self.description = description if description is not None else _table_description(self)

    def add(self, a: int, b: int) -> int:
        return self.add_rows[a][b]

    def mul(self, a: int, b: int) -> int:
        return self.mul_rows[a][b]

    @cached_property
    def neg_table(self) -> tuple[int, ...]:
        return tuple(int(np.flatnonzero(self.add_table[a] == 0)[0]) for a in range(self.size))

    def neg(self, a: int) -> int:
        return self.neg_table[a]

    def power(self, a: int, k: int) -> int:
        r = self.one
        for _ in range(k):
            r = self.mul_rows[r][a]
        return r

    @property
    def elements(self) -> range:
        return range(self.size)

    @cached_property
    def _key(self) -> tuple:
        return (self.size, self.one, self.add_table.tobytes(), self.mul_table.tobytes())

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FiniteRing):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"FiniteRing({ring_label(self.description)}, size={self.size})"


def ring_label(desc: dict) -> str:
    """Short human-readable name for a ring description."""
    kind = desc.get("kind")
    if kind == "zn":
        return f"Z/{desc['n']}"
    if kind == "product":
        return " x ".join(ring_label(f) for f in desc["factors"])
    if kind == "poly_quotient":
        return f"Z/{desc['modulus']}[x]/({_poly_str(desc['poly'])})"
    return f"table[{desc.get('n')}]"


def _poly_str(coeffs: Sequence[int]) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
        terms.append(str(c) if not mono else (mono if c == 1 else f"{c}{mono}"))
    return "+".join(terms) or "0"


def _table_description(R: FiniteRing) -> dict:
    return {"kind": "table", "n": R.size, "one": R.one,
            "add": R.add_table.tolist(), "mul": R.mul_table.tolist()}


def _check_cap(size: int, cap: int | None) -> None:
    cap = DEFAULT_SIZE_CAP if cap is None else cap
    if size > cap:
        raise CapacityError(f"ring of size {size} exceeds the size cap {cap}")


# ---------------------------------------------------------------------------
# element encodings

def encode_mixed_radix(sizes: Sequence[int], digits: Sequence[int]) -> int:
    """Index of a tuple, first coordinate most significant."""
    idx = 0
    for size, d in zip(sizes, digits):
        idx = idx * size + d
    return idx


def decode_mixed_radix(sizes: Sequence[int], idx: int) -> tuple[int, ...]:
    out = []
    for size in reversed(sizes):
        idx, d = divmod(idx, size)
        out.append(d)
    return tuple(reversed(out))


def encode_coeffs(modulus: int, coeffs: Sequence[int]) -> int:
    """Index of a coefficient vector, constant term least significant."""
    return sum(c * modulus**k for k, c in enumerate(coeffs))


def decode_coeffs(modulus: int, degree: int, idx: int) -> tuple[int, ...]:
    out = []
    for _ in range(degree):
        idx, c = divmod(idx, modulus)
        out.append(c)
    return tuple(out)


# ---------------------------------------------------------------------------
# constructors

def make_zn(n: int) -> FiniteRing:
    """The ring of integers modulo ``n``."""
    if not isinstance(n, (int, np.integer)) or n < 2:
        raise InvalidParameterError(f"Z/n needs n >= 2, got {n!r}")
    n = int(n)
    r = np.arange(n)
    return FiniteRing((r[:, None] + r[None, :]) % n, (r[:, None] * r[None, :]) % n, 1 % n,
                      {"kind": "zn", "n": n})


def make_product(factors: Sequence[FiniteRing], cap: int | None = None) -> FiniteRing:
    """Componentwise product ring; index encodes the tuple in mixed radix."""
    factors = list(factors)
    if not factors:
        raise InvalidParameterError("product needs at least one factor")
    sizes = [f.size for f in factors]
    total = int(np.prod(sizes))
    _check_cap(total, cap)
    digits = np.array([decode_mixed_radix(sizes, i) for i in range(total)], dtype=np.int64)
    weights = np.array([int(np.prod(sizes[k + 1:])) for k in range(len(sizes))], dtype=np.int64)
    add = np.zeros((total, total), dtype=np.int64)
    mul = np.zeros((total, total), dtype=np.int64)
    for k, f in enumerate(factors):
        col = digits[:, k]
        add += f.add_table[col[:, None], col[None, :]] * weights[k]
        mul += f.mul_table[col[:, None], col[None, :]] * weights[k]
    one = encode_mixed_radix(sizes, [f.one for f in factors])
    desc = {"kind": "product", "factors": [f.description for f in factors]}
    return FiniteRing(add, mul, one, desc)


def make_poly_quotient(modulus: int, poly: Sequence[int], cap: int | None = None) -> FiniteRing:
    """``(Z/modulus)[x] / (poly)`` for a monic ``poly`` given low-to-high."""
    if modulus < 2:
        raise InvalidParameterError("modulus must be >= 2")
    poly = [int(c) for c in poly]
    d = len(poly) - 1
    if d < 1:
        raise InvalidParameterError("polynomial must have degree >= 1")
    if poly[-1] != 1:
        raise InvalidParameterError(f"polynomial must be monic, leading coefficient is {poly[-1]}")
    size = modulus**d
    _check_cap(size, cap)
    red = [c % modulus for c in poly]
    vecs = [decode_coeffs(modulus, d, i) for i in range(size)]
    add = np.zeros((size, size), dtype=np.int64)
    mul = np.zeros((size, size), dtype=np.int64)
    for i, u in enumerate(vecs):
        for j in range(i, size):
            v = vecs[j]
            s = [(a + b) % modulus for a, b in zip(u, v)]
            p = [0] * (2 * d - 1)
            for a_k, a in enumerate(u):
                if a:
                    for b_k, b in enumerate(v):
                        p[a_k + b_k] += a * b
            for k in range(2 * d - 2, d - 1, -1):
                c = p[k] % modulus
                if c:
                    for t in range(d):
                        p[k - d + t] -= c * red[t]
                p[k] = 0
            prod_idx = encode_coeffs(modulus, [c % modulus for c in p[:d]])
            add[i, j] = add[j, i] = encode_coeffs(modulus, s)
            mul[i, j] = mul[j, i] = prod_idx
    desc = {"kind": "poly_quotient", "modulus": modulus, "poly": poly}
    return FiniteRing(add, mul, 1, desc)


def make_table(n: int, add, mul, one: int, cap: int | None = None) -> FiniteRing:
    """Ring from raw tables, validated exhaustively.

    If the additive identity is not element 0 the elements are renumbered by
    swapping it with 0; the returned ring's description holds the renumbered
    tables.
    """
    _check_cap(n, cap)
    A = np.array(add, dtype=np.int64)
    M = np.array(mul, dtype=np.int64)
    if A.shape != (n, n) or M.shape != (n, n):
        raise InvalidParameterError(f"tables must be {n} x {n}")
    if A.min() < 0 or A.max() >= n or M.min() < 0 or M.max() >= n:
        raise InvalidParameterError("table entries must lie in 0..n-1")
    if not (0 <= one < n):
        raise InvalidParameterError(f"one={one} is not an element index")
    idx = np.arange(n)
    zeros = [z for z in range(n) if np.all(A[z] == idx)]
    if not zeros:
        raise RingValidationError("additive identity", ())
    z = zeros[0]
    if z != 0:
        perm = idx.copy()
        perm[0], perm[z] = z, 0   # perm is its own inverse
        A = perm[A[np.ix_(perm, perm)]]
        M = perm[M[np.ix_(perm, perm)]]
        one = int(perm[one])
    R = FiniteRing(A, M, one, None)
    return R


# ---------------------------------------------------------------------------
# units and morphisms

def units(R: FiniteRing) -> frozenset[int]:
    """Elements with a multiplicative inverse."""
    return frozenset(int(a) for a in np.flatnonzero((R.mul_table == R.one).any(axis=1)))


@dataclass(frozen=True, eq=True)
class RingMorphism:
    """A unital ring morphism stored as its value table."""

    source: FiniteRing
    target: FiniteRing
    map: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "map", tuple(int(x) for x in self.map))
        bad = self.violation()
        if bad is not None:
            raise InvalidParameterError(f"not a ring morphism: {bad}")

    def violation(self) -> str | None:
        S, T, f = self.source, self.target, self.map
        if len(f) != S.size or any(not (0 <= x < T.size) for x in f):
            return "map has wrong length or out-of-range values"
        if f[S.one] != T.one:
            return "one is not sent to one"
        F = np.array(f)
        if not np.array_equal(F[S.add_table], T.add_table[F[:, None], F[None, :]]):
            return "additivity fails"
        if not np.array_equal(F[S.mul_table], T.mul_table[F[:, None], F[None, :]]):
            return "multiplicativity fails"
        return None

    def __call__(self, a: int) -> int:
        return self.map[a]

    def compose(self, other: "RingMorphism") -> "RingMorphism":
        """``self`` after ``other``."""
        if other.target != self.source:
            raise InvalidParameterError("morphisms are not composable")
        return RingMorphism(other.source, self.target, tuple(self.map[x] for x in other.map))

    @classmethod
    def identity(cls, R: FiniteRing) -> "RingMorphism":
        return cls(R, R, tuple(range(R.size)))


def subring_closure(R: FiniteRing, gens: Iterable[int]) -> set[int]:
    """Smallest subset containing 0, 1 and ``gens`` closed under + and *."""
    seen = {0, R.one, *gens}
    todo = list(seen)
    while todo:
        x = todo.pop()
        for y in list(seen):
            for c in (R.add_rows[x][y], R.mul_rows[x][y]):
                if c not in seen:
                    seen.add(c)
                    todo.append(c)
    return seen


def ring_generators(R: FiniteRing) -> list[int]:
    """Greedy generating set of ``R`` as a unital ring."""
    gens: list[int] = []
    sub = subring_closure(R, gens)
    for a in R.elements:
        if a not in sub:
            gens.append(a)
            sub = subring_closure(R, gens)
    return gens


def _extend(R1: FiniteRing, R2: FiniteRing, partial: dict[int, int], x: int, y: int) -> dict | None:
    """Add ``x -> y`` to a consistent partial morphism and close it up.

    Returns the enlarged map or ``None`` on a clash."""
    m = dict(partial)
    if x in m:
        return m if m[x] == y else None
    m[x] = y
    todo = [x]
    while todo:
        u = todo.pop()
        for v in list(m):
            mu, mv = m[u], m[v]
            for c, val in ((R1.add_rows[u][v], R2.add_rows[mu][mv]),
                           (R1.mul_rows[u][v], R2.mul_rows[mu][mv])):
                got = m.get(c)
                if got is None:
                    m[c] = val
                    todo.append(c)
                elif got != val:
                    return None
    return m


def enumerate_morphisms(R1: FiniteRing, R2: FiniteRing, cap: int | None = None) -> list[RingMorphism]:
    """All unital ring morphisms ``R1 -> R2`` in lexicographic order of their tables.

    Backtracks over images of a generating set; each partial assignment is
    closed under + and * immediately so inconsistent branches die early.
    """
    cap = DEFAULT_MORPHISM_CAP if cap is None else cap
    if R1.size > cap:
        raise CapacityError(f"morphism search source of size {R1.size} exceeds cap {cap}")
    base = _extend(R1, R2, {0: 0}, R1.one, R2.one)
    if base is None:       # characteristic of R2 does not divide that of R1
        return []
    gens = ring_generators(R1)
    found: list[RingMorphism] = []

    def search(k: int, m: dict[int, int]) -> None:
        if k == len(gens):
            found.append(RingMorphism(R1, R2, tuple(m[a] for a in R1.elements)))
            return
        g = gens[k]
        if g in m:
            search(k + 1, m)
            return
        for img in R2.elements:
            nxt = _extend(R1, R2, m, g, img)
            if nxt is not None:
                search(k + 1, nxt)

    search(0, base)
    found = list({f.map: f for f in found}.values())
    found.sort(key=lambda f: f.map)
    return found


# ---------------------------------------------------------------------------
# JSON ring descriptions

_RING_KEYS = {
    "zn": {"kind", "n"},
    "product": {"kind", "factors"},
    "poly_quotient": {"kind", "modulus", "poly"},
    "table": {"kind", "n", "one", "add", "mul"},
}


def ring_from_json(obj: Any, cap: int | None = None) -> FiniteRing:
    """Build a ring from its JSON description; unknown or missing keys are errors."""
    if not isinstance(obj, dict):
        raise InvalidParameterError("ring description must be a JSON object")
    kind = obj.get("kind")
    if kind not in _RING_KEYS:
        raise InvalidParameterError(f"unknown ring kind {kind!r}")
    keys = set(obj)
    if keys != _RING_KEYS[kind]:
        extra, missing = keys - _RING_KEYS[kind], _RING_KEYS[kind] - keys
        raise InvalidParameterError(f"bad keys for {kind} ring: extra={sorted(extra)} missing={sorted(missing)}")
    if kind == "zn":
        return make_zn(_as_int(obj["n"], "n"))
    if kind == "product":
        if not isinstance(obj["factors"], list):
            raise InvalidParameterError("factors must be a list")
        sizes_known = [ring_from_json(f, cap) for f in obj["factors"]]
        return make_product(sizes_known, cap)
    if kind == "poly_quotient":
        if not isinstance(obj["poly"], list):
            raise InvalidParameterError("poly must be a list of integers")
        return make_poly_quotient(_as_int(obj["modulus"], "modulus"),
                                  [_as_int(c, "poly") for c in obj["poly"]], cap)
    try:
        return make_table(_as_int(obj["n"], "n"), obj["add"], obj["mul"], _as_int(obj["one"], "one"), cap)
    except (TypeError, ValueError) as exc:
        if isinstance(exc, (InvalidParameterError, RingValidationError)):
            raise
        raise InvalidParameterError(f"malformed table ring: {exc}") from exc


def _as_int(x: Any, name: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InvalidParameterError(f"{name} must be an integer, got {x!r}")
    return x


def ring_to_json(R: FiniteRing) -> dict:
    return R.description


def load_ring(path: str | Path, cap: int | None = None) -> FiniteRing:
    try:
        obj = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InvalidParameterError(f"{path}: not valid JSON ({exc})") from exc
    return ring_from_json(obj, cap)
