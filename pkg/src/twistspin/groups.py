"""Finite group arithmetic on Cayley tables with 0-based element indices.

Three concrete constructions are provided: the group of 2x2 determinant-1
matrices over the integers mod 3 (order 24), the dihedral symmetry group of a
2k-gon presented as <r, s | r^(2k), s^2, rsrs> (order 4k, rotation of order
2k), and generic user-supplied Cayley tables.  Element iteration order is
fixed: lexicographic on the canonical fields of each element kind, so all
enumeration output downstream is deterministic.

Groups and elements are immutable after construction and safe for concurrent
use.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

MOD = 3

# matrices are stored as (a, b, c, d) with entries canonically in {0, 1, 2};
# rendering uses the symmetric residues {-1, 0, 1}
Mat2Z3 = tuple[int, int, int, int]
DihedralElt = tuple[int, int]  # (rotation exponent p in [0, 2k), reflection flag)


class GroupError(ValueError):
    """Invalid group construction or misuse of group operations."""


class OrderClass(enum.Enum):
    """Element classes of the mod-3 matrix group, by defining power condition."""

    IDENTITY = "identity"
    MINUS_IDENTITY = "minus-identity"       # the central involution
    ORDER_FOUR = "order-four"               # A^2 = -I
    ORDER_THREE = "order-three"             # A^3 = I, A != I
    ORDER_SIX = "order-six"                 # A^3 = -I, A != -I


@dataclass(frozen=True)
class GroupElement:
    """Opaque handle: an element index inside a fixed group."""

    group: FiniteGroup
    index: int

    def __mul__(self, other: GroupElement) -> GroupElement:
        return self.group.mul(self, other)

    def __pow__(self, t: int) -> GroupElement:
        return self.group.power(self, t)

    def inverse(self) -> GroupElement:
        return self.group.inverse(self)

    def order(self) -> int:
        return self.group.order_of(self)

    @property
    def label(self) -> str:
        return self.group.label(self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.index == other.index and self.group.descriptor == other.group.descriptor

    def __lt__(self, other: GroupElement) -> bool:
        self.group._require_same(other.group)
        return self.index < other.index

    def __hash__(self) -> int:
        return hash((self.group.descriptor, self.index))

    def __repr__(self) -> str:
        return f"<{self.group.descriptor}: {self.label}>"


class FiniteGroup:
    """A finite group backed by multiplication/inverse lookup tables.

    Subclasses fill ``_mul_table`` (order x order, int32), element labels, and
    a ``descriptor`` string; everything else (inverses, identity, powers,
    orders, the center) is derived here.
    """

    descriptor: str

    def __init__(self, descriptor: str, mul_table: np.ndarray):
        self.descriptor = descriptor
        self._mul_table = np.ascontiguousarray(mul_table, dtype=np.int32)
        n = self._mul_table.shape[0]
        if self._mul_table.shape != (n, n):
            raise GroupError("multiplication table must be square")
        self.order = n
        self._identity = self._find_identity()
        self._inv_table = self._build_inverses()
        # plain lists for scalar lookups; numpy arrays feed the search kernel
        self._mul = self._mul_table.tolist()
        self._inv = self._inv_table.tolist()
        self._element_orders: list[int | None] = [None] * n
        self._center: tuple[int, ...] | None = None

    # -- table construction helpers

    def _find_identity(self) -> int:
        n = self.order
        for e in range(n):
            if np.array_equal(self._mul_table[e], np.arange(n)) and np.array_equal(
                self._mul_table[:, e], np.arange(n)
            ):
                return e
        raise GroupError("table has no two-sided identity")

    def _build_inverses(self) -> np.ndarray:
        n = self.order
        inv = np.full(n, -1, dtype=np.int32)
        for g in range(n):
            hits = np.nonzero(self._mul_table[g] == self._identity)[0]
            if len(hits) != 1 or self._mul_table[hits[0], g] != self._identity:
                raise GroupError(f"element {g} has no unique two-sided inverse")
            inv[g] = hits[0]
        return inv

    def _check_associativity(self) -> None:
        t = self._mul_table
        # (a*b)*c == a*(b*c), fully vectorized: shape (n, n, n)
        left = t[t, :]
        right = np.take(t, t, axis=1)
        if not np.array_equal(left, right):
            a, b, c = np.argwhere(left != right)[0]
            raise GroupError(f"table is not associative at ({a}, {b}, {c})")

    def _require_same(self, other: FiniteGroup) -> None:
        if self.descriptor != other.descriptor:
            raise GroupError(
                f"mixed-group operands: {self.descriptor} vs {other.descriptor}"
            )

    # -- core operations

    @property
    def identity(self) -> GroupElement:
        return GroupElement(self, self._identity)

    def element(self, index: int) -> GroupElement:
        if not 0 <= index < self.order:
            raise GroupError(f"element index {index} out of range for {self.descriptor}")
        return GroupElement(self, index)

    def elements(self) -> Iterator[GroupElement]:
        return (GroupElement(self, i) for i in range(self.order))

    def mul(self, g: GroupElement, h: GroupElement) -> GroupElement:
        self._require_same(g.group)
        self._require_same(h.group)
        return GroupElement(self, self._mul[g.index][h.index])

    def inverse(self, g: GroupElement) -> GroupElement:
        self._require_same(g.group)
        return GroupElement(self, self._inv[g.index])

    def power(self, g: GroupElement, t: int) -> GroupElement:
        """g**t by square-and-multiply; t may be negative, g**0 is the identity."""
        self._require_same(g.group)
        base = g.index
        if t < 0:
            base = self._inv[base]
            t = -t
        acc = self._identity
        mul = self._mul
        while t:
            if t & 1:
                acc = mul[acc][base]
            base = mul[base][base]
            t >>= 1
        return GroupElement(self, acc)

    def order_of(self, g: GroupElement) -> int:
        self._require_same(g.group)
        cached = self._element_orders[g.index]
        if cached is not None:
            return cached
        t, x = 1, g.index
        while x != self._identity:
            x = self._mul[x][g.index]
            t += 1
        self._element_orders[g.index] = t
        return t

    def center(self) -> tuple[GroupElement, ...]:
        """The exact center {z : zg = gz for all g}, computed exhaustively."""
        if self._center is None:
            t = self._mul_table
            central = np.nonzero((t == t.T).all(axis=1))[0]
            self._center = tuple(int(z) for z in central)
        return tuple(GroupElement(self, z) for z in self._center)

    # -- rendering

    def label(self, g: GroupElement) -> str:
        return f"g{g.index}"

    def parse_label(self, text: str) -> GroupElement:
        m = re.fullmatch(r"g(\d+)", text.strip())
        if not m:
            raise GroupError(f"cannot parse element {text!r} for {self.descriptor}")
        return self.element(int(m.group(1)))

    # -- raw tables (consumed by the search kernel)

    @property
    def mul_table(self) -> np.ndarray:
        return self._mul_table

    @property
    def inv_table(self) -> np.ndarray:
        return self._inv_table

    @property
    def identity_index(self) -> int:
        return self._identity

    def __repr__(self) -> str:
        return f"<FiniteGroup {self.descriptor}, order {self.order}>"


def _mat_mul(m: Mat2Z3, n: Mat2Z3) -> Mat2Z3:
    a, b, c, d = m
    e, f, g, h = n
    return (
        (a * e + b * g) % MOD,
        (a * f + b * h) % MOD,
        (c * e + d * g) % MOD,
        (c * f + d * h) % MOD,
    )


class Sl2z3Group(FiniteGroup):
    """Determinant-1 2x2 matrices over the integers mod 3 (order 24).

    Elements are indexed lexicographically by the canonical entry tuple
    (a, b, c, d) with entries in {0, 1, 2}.
    """

    def __init__(self) -> None:
        mats = [
            (a, b, c, d)
            for a in range(MOD)
            for b in range(MOD)
            for c in range(MOD)
            for d in range(MOD)
            if (a * d - b * c) % MOD == 1
        ]
        self._mats: tuple[Mat2Z3, ...] = tuple(mats)  # already lexicographic
        self._mat_index = {m: i for i, m in enumerate(self._mats)}
        n = len(mats)
        table = np.empty((n, n), dtype=np.int32)
        for i, m in enumerate(mats):
            for j, k in enumerate(mats):
                table[i, j] = self._mat_index[_mat_mul(m, k)]
        super().__init__("sl2z3", table)
        self._minus_identity = self._mat_index[(2, 0, 0, 2)]

    def matrix(self, g: GroupElement) -> Mat2Z3:
        self._require_same(g.group)
        return self._mats[g.index]

    def from_matrix(self, entries: Sequence[int]) -> GroupElement:
        """Build an element from four integer entries (any residues mod 3)."""
        if len(entries) != 4:
            raise GroupError("a matrix needs exactly four entries")
        key = tuple(int(v) % MOD for v in entries)
        idx = self._mat_index.get(key)  # type: ignore[arg-type]
        if idx is None:
            raise GroupError(f"matrix {list(entries)} has determinant != 1 mod {MOD}")
        return GroupElement(self, idx)

    @property
    def minus_identity(self) -> GroupElement:
        return GroupElement(self, self._minus_identity)

    def classify(self, g: GroupElement) -> OrderClass:
        """Class of g by its defining power condition (not by any fixed listing)."""
        self._require_same(g.group)
        if g.index == self._identity:
            return OrderClass.IDENTITY
        if g.index == self._minus_identity:
            return OrderClass.MINUS_IDENTITY
        sq = self._mul[g.index][g.index]
        if sq == self._minus_identity:
            return OrderClass.ORDER_FOUR
        cube = self._mul[sq][g.index]
        if cube == self._identity:
            return OrderClass.ORDER_THREE
        if cube == self._minus_identity:
            return OrderClass.ORDER_SIX
        raise GroupError(f"unclassifiable element {g.index}")  # unreachable at mod 3

    def label(self, g: GroupElement) -> str:
        a, b, c, d = (v if v <= 1 else v - MOD for v in self._mats[g.index])
        return f"[[{a},{b}],[{c},{d}]]"

    def parse_label(self, text: str) -> GroupElement:
        s = text.strip()
        if s == "I":
            return self.identity
        if s == "-I":
            return self.minus_identity
        m = re.fullmatch(
            r"\[\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*,\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\]", s
        )
        if not m:
            raise GroupError(f"cannot parse matrix element {text!r}")
        return self.from_matrix([int(v) for v in m.groups()])


class DihedralGroup(FiniteGroup):
    """The group <r, s | r^(2k), s^2, rsrs>: symmetries of a 2k-gon, order 4k.

    Elements are the normal forms r^p s^delta with p in [0, 2k) and delta in
    {0, 1}, indexed lexicographically on (p, delta).  The product rule
    (p1, d1) * (p2, d2) = ((p1 + (-1)^d1 p2) mod 2k, d1 xor d2) is exactly the
    normal-form multiplication forced by the defining relators.
    """

    def __init__(self, k: int):
        if k < 1:
            raise GroupError("k must be a positive integer")
        self.k = k
        rot = 2 * k
        self._rot = rot
        n = 2 * rot
        table = np.empty((n, n), dtype=np.int32)
        for p1 in range(rot):
            for d1 in (0, 1):
                for p2 in range(rot):
                    for d2 in (0, 1):
                        p = (p1 + p2) % rot if d1 == 0 else (p1 - p2) % rot
                        table[2 * p1 + d1, 2 * p2 + d2] = 2 * p + (d1 ^ d2)
        super().__init__(f"d2k:{k}", table)

    def pair(self, g: GroupElement) -> DihedralElt:
        self._require_same(g.group)
        return (g.index // 2, g.index & 1)

    def from_pair(self, p: int, delta: int) -> GroupElement:
        if delta not in (0, 1):
            raise GroupError("reflection flag must be 0 or 1")
        return GroupElement(self, 2 * (p % self._rot) + delta)

    def rotation(self, p: int) -> GroupElement:
        return self.from_pair(p, 0)

    @property
    def central_rotation(self) -> GroupElement:
        """r^k: the order-2 rotation, central for every k."""
        return self.from_pair(self.k, 0)

    def label(self, g: GroupElement) -> str:
        p, d = self.pair(g)
        return f"r^{p} s" if d else f"r^{p}"

    def parse_label(self, text: str) -> GroupElement:
        m = re.fullmatch(r"r\^(-?\d+)(\s+s)?", text.strip())
        if not m:
            raise GroupError(f"cannot parse dihedral element {text!r}")
        return self.from_pair(int(m.group(1)), 1 if m.group(2) else 0)


class CayleyTableGroup(FiniteGroup):
    """A group given by an explicit multiplication table (order <= 256).

    The table is validated exhaustively at construction: associativity over
    all triples, a two-sided identity, and unique two-sided inverses.
    """

    MAX_ORDER = 256

    def __init__(self, table: Sequence[Sequence[int]] | np.ndarray, name: str = "cayley"):
        arr = np.asarray(table, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise GroupError("Cayley table must be a square matrix")
        n = arr.shape[0]
        if n == 0 or n > self.MAX_ORDER:
            raise GroupError(f"Cayley table order must be in [1, {self.MAX_ORDER}]")
        if arr.min() < 0 or arr.max() >= n:
            raise GroupError("Cayley table entries must be element indices")
        super().__init__(f"{name}:{n}", arr.astype(np.int32))
        self._check_associativity()


def group_from_descriptor(descriptor: str) -> FiniteGroup:
    """Build a target group from its descriptor string ('sl2z3' or 'd2k:<k>')."""
    s = descriptor.strip().lower()
    if s == "sl2z3":
        return Sl2z3Group()
    m = re.fullmatch(r"d2k:(\d+)", s)
    if m:
        k = int(m.group(1))
        if k < 1:
            raise GroupError("d2k:<k> needs k >= 1")
        return DihedralGroup(k)
    raise GroupError(f"unknown group descriptor {descriptor!r}")
