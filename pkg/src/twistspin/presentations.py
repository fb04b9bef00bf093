"""Wirtinger presentations of classical knots and the derived 2-knot groups.

A branched twist spin built from a knot K and integers (m, n) has knot group

    < x_1..x_l, h | base relators, [x_i, h] for all i, x_1^|m| h^beta >

where h is central and beta solves n*beta = eps (mod |m|) with eps the sign
of m.  ``build_bts`` constructs that presentation; ``compute_beta`` picks the
canonical beta whose parity is opposite to m, so h^beta collapses to the
identity (m odd) or to h (m even) whenever h is sent to an order-2 element.

Words are sequences of (generator, sign) pairs; generator 0 is reserved for h
and 1..l name the meridians.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

H = 0  # generator index reserved for the regular-orbit generator


class PresentationError(ValueError):
    """Invalid presentation data or parameters."""


class KnotFileError(PresentationError):
    """Malformed knot file; carries 1-based line and column positions."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Word:
    """A word in the free group: ((generator, sign), ...) with sign in {+1, -1}."""

    syms: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        for g, s in self.syms:
            if s not in (1, -1):
                raise PresentationError(f"bad exponent sign {s} in word")
            if g < 0:
                raise PresentationError(f"bad generator index {g} in word")

    @staticmethod
    def from_syms(syms: Iterable[tuple[int, int]]) -> Word:
        return Word(tuple((int(g), int(s)) for g, s in syms))

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.syms)

    def __len__(self) -> int:
        return len(self.syms)

    def generators(self) -> set[int]:
        return {g for g, _ in self.syms}

    def inverse(self) -> Word:
        return Word(tuple((g, -s) for g, s in reversed(self.syms)))

    def exponent_sum(self, gen: int) -> int:
        return sum(s for g, s in self.syms if g == gen)

    def is_crossing_form(self) -> bool:
        """x_a x_b x_a^-1 x_c^-1 for some generators a, b, c (h not involved)."""
        if len(self.syms) != 4:
            return False
        (g0, s0), (g1, s1), (g2, s2), (g3, s3) = self.syms
        return (
            (s0, s1, s2, s3) == (1, 1, -1, -1)
            and g0 == g2
            and H not in (g0, g1, g3)
        )

    def crossing_triple(self) -> tuple[int, int, int]:
        if not self.is_crossing_form():
            raise PresentationError("word is not in crossing form")
        return (self.syms[0][0], self.syms[1][0], self.syms[3][0])


def crossing_relator(a: int, b: int, c: int, num_generators: int | None = None) -> Word:
    """The relator x_a x_b x_a^-1 x_c^-1 of a crossing with over-arc a."""
    for g in (a, b, c):
        if g < 1 or (num_generators is not None and g > num_generators):
            raise PresentationError(f"generator index {g} out of range")
    return Word(((a, 1), (b, 1), (a, -1), (c, -1)))


@dataclass(frozen=True)
class WirtingerPresentation:
    """<x_1..x_l | relators>, one generator per arc of a knot diagram."""

    num_generators: int
    relators: tuple[Word, ...]
    name: str = ""
    provenance: str = ""

    def __post_init__(self) -> None:
        if self.num_generators < 1:
            raise PresentationError("a knot presentation needs at least one generator")
        for w in self.relators:
            for g, _ in w:
                if not 1 <= g <= self.num_generators:
                    raise PresentationError(
                        f"relator references generator {g}, but l = {self.num_generators}"
                    )

    @staticmethod
    def from_crossings(
        name: str,
        num_generators: int,
        triples: Sequence[tuple[int, int, int]],
        provenance: str = "",
    ) -> WirtingerPresentation:
        rels = tuple(crossing_relator(a, b, c, num_generators) for a, b, c in triples)
        return WirtingerPresentation(num_generators, rels, name=name, provenance=provenance)

    def crossing_triples(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(w.crossing_triple() for w in self.relators if w.is_crossing_form())

    def abelianization_is_infinite_cyclic(self) -> bool:
        """Exact rank check: the exponent-sum matrix must have rank l - 1."""
        l = self.num_generators
        rows = [
            [Fraction(w.exponent_sum(g)) for g in range(1, l + 1)] for w in self.relators
        ]
        rank = 0
        r = 0
        for col in range(l):
            piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            pivval = rows[r][col]
            for i in range(len(rows)):
                if i != r and rows[i][col] != 0:
                    f = rows[i][col] / pivval
                    rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
            r += 1
            rank += 1
        return rank == l - 1


def compute_beta(m: int, n: int) -> int:
    """Least beta >= 0 with n*beta = sign(m) (mod |m|) and parity(beta) != parity(m).

    Requires |m| >= 2 and gcd(m, n) = 1; the result lies in [0, 2|m|).  For
    even m the congruence already forces beta odd; for odd m the two smallest
    solutions differ by |m|, so exactly one of them is even.
    """
    if abs(m) < 2:
        raise PresentationError("compute_beta needs |m| >= 2; small m are special-cased")
    if n < 1:
        raise PresentationError("n must be a positive integer")
    if math.gcd(m, n) != 1:
        raise PresentationError(f"m and n must be coprime, got gcd({m},{n}) != 1")
    am = abs(m)
    eps = 1 if m >= 0 else -1
    beta = (eps * pow(n, -1, am)) % am
    if beta % 2 == am % 2:
        beta += am
    return beta


def _coprimality_ok(m: int, n: int) -> bool:
    if n < 1:
        return False
    if abs(m) >= 2:
        return math.gcd(m, n) == 1
    return True  # the twist parameter is unconstrained for m in {0, +-1}


@dataclass(frozen=True)
class BtsPresentation:
    """The branched-twist-spin knot group presentation derived from a base knot."""

    base: WirtingerPresentation
    m: int
    n: int
    beta: int
    relators: tuple[Word, ...] = field(compare=False)

    @property
    def num_generators(self) -> int:
        """Meridian generators only; h is generator 0 on top of these."""
        return self.base.num_generators


def build_bts(base: WirtingerPresentation, m: int, n: int) -> BtsPresentation:
    """Assemble base relators + all [x_i, h] commutators + the power relator.

    The relator list order is fixed: base relators first, then the l
    commutators in generator order, then x_1^|m| h^beta.  For m = 0 the power
    relator is replaced by the relator h (the orbit generator dies); for
    |m| = 1 beta = 0 and the power relator degenerates to x_1, collapsing the
    group to the infinite cyclic group generated by h.
    """
    if not _coprimality_ok(m, n):
        raise PresentationError(
            f"invalid parameters m={m}, n={n}: need n >= 1 coprime to m for |m| >= 2"
        )
    l = base.num_generators
    rels: list[Word] = list(base.relators)
    for i in range(1, l + 1):
        rels.append(Word(((i, 1), (H, 1), (i, -1), (H, -1))))
    if m == 0:
        beta = 0
        rels.append(Word(((H, 1),)))
    else:
        beta = 0 if abs(m) == 1 else compute_beta(m, n)
        power = tuple((1, 1) for _ in range(abs(m))) + tuple((H, 1) for _ in range(beta))
        rels.append(Word(power))
    return BtsPresentation(base=base, m=m, n=n, beta=beta, relators=tuple(rels))


# -- knot file format ---------------------------------------------------------
#
#   # comment
#   name: trefoil
#   generators: 3
#   crossing: 1 2 3          (the relator x_1 x_2 x_1^-1 x_3^-1)
#   relator: 1 2 -1 -3       (general word as signed generator indices)
#
# Canonical serialization: optional name line, generators line, then relators
# in input order, single spaces, trailing newline.

_NAME_RE = re.compile(r"[A-Za-z0-9_.+-]+")


def parse_knot_file(text: str) -> WirtingerPresentation:
    name = ""
    num_generators: int | None = None
    relators: list[Word] = []
    pending: list[tuple[Word, int]] = []  # validated against l once it is known

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        if ":" not in line:
            raise KnotFileError("expected '<key>: <value>'", lineno)
        key, _, value = line.partition(":")
        keyword = key.strip()
        col = len(key) + 2
        fields = value.split()
        if keyword == "name":
            if not fields or not _NAME_RE.fullmatch(value.strip()):
                raise KnotFileError("name must be a single printable token", lineno, col)
            name = value.strip()
        elif keyword == "generators":
            if num_generators is not None:
                raise KnotFileError("duplicate generators line", lineno)
            if len(fields) != 1 or not fields[0].isdigit() or int(fields[0]) < 1:
                raise KnotFileError("generators takes one positive integer", lineno, col)
            num_generators = int(fields[0])
        elif keyword in ("crossing", "relator"):
            try:
                ints = [int(f) for f in fields]
            except ValueError:
                raise KnotFileError(f"{keyword} takes integers", lineno, col) from None
            if keyword == "crossing":
                if len(ints) != 3:
                    raise KnotFileError("crossing takes exactly three indices", lineno, col)
                if any(v < 1 for v in ints):
                    raise KnotFileError(
                        "crossing indices start at 1 (0 is reserved)", lineno, col
                    )
                word = Word(((ints[0], 1), (ints[1], 1), (ints[0], -1), (ints[2], -1)))
            else:
                if not ints:
                    raise KnotFileError("empty relator", lineno, col)
                if any(v == 0 for v in ints):
                    raise KnotFileError(
                        "generator index 0 is reserved; indices start at 1", lineno, col
                    )
                word = Word(tuple((abs(v), 1 if v > 0 else -1) for v in ints))
            pending.append((word, lineno))
        else:
            raise KnotFileError(f"unknown keyword {keyword!r}", lineno)

    if num_generators is None:
        raise KnotFileError("missing 'generators:' line", max(1, text.count("\n") + 1))
    for word, lineno in pending:
        for g, _ in word:
            if g > num_generators:
                raise KnotFileError(
                    f"generator {g} out of range (l = {num_generators})", lineno
                )
        relators.append(word)
    return WirtingerPresentation(num_generators, tuple(relators), name=name)


def serialize_knot(p: WirtingerPresentation) -> str:
    lines = []
    if p.name:
        lines.append(f"name: {p.name}")
    lines.append(f"generators: {p.num_generators}")
    for w in p.relators:
        if w.is_crossing_form():
            a, b, c = w.crossing_triple()
            lines.append(f"crossing: {a} {b} {c}")
        else:
            lines.append("relator: " + " ".join(str(g * s) for g, s in w))
    return "\n".join(lines) + "\n"
