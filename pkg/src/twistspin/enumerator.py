"""Count homomorphisms from a twist-spin presentation into a finite group.

Two engines produce identical output:

* ``enumerate_oracle`` tries every assignment in G^l (the ground truth; it is
  deliberately free of any pruning and is guarded by a state-count cap), and

* ``enumerate_backtracking`` compiles the presentation into a small search
  program: relators mentioning a single searched generator shrink its domain
  up front, crossing relators x_a x_b x_a^-1 x_c^-1 determine one generator
  from the others (so only a spanning subset of generators is searched), and
  every remaining relator is checked as early as its generators are known.

The image of h (slot 0) is prescribed, never searched; looping h over the
center is a caller-level concern.  Both engines delegate the inner loop to a
kernel backend (compiled or pure Python, see ``kernels``).
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

import numpy as np

from . import kernels
from .groups import FiniteGroup, GroupElement, group_from_descriptor
from .presentations import H, BtsPresentation, Word

ORACLE_STATE_CAP = 16_777_216  # |G|**l above this is refused (2**24 states)

_LOOP, _DERIVE, _CHECK = 0, 1, 2


class EnumerationError(ValueError):
    """Misuse of the enumeration API (bad assignment, wrong group, ...)."""


class OracleGuardError(RuntimeError):
    """The exhaustive oracle would exceed its state-count bound."""

    def __init__(self, states: int):
        super().__init__(
            f"oracle search space has {states} states, above the cap of "
            f"{ORACLE_STATE_CAP}; use the backtracking engine"
        )
        self.states = states


@dataclass(frozen=True, order=True)
class Representation:
    """An assignment slot -> element index satisfying every relator (slot 0 = h)."""

    values: tuple[int, ...]
    group: FiniteGroup = field(compare=False)

    def image(self, generator: int) -> GroupElement:
        return self.group.element(self.values[generator])

    @property
    def h_image(self) -> GroupElement:
        return self.image(H)

    @property
    def meridian_images(self) -> tuple[GroupElement, ...]:
        return tuple(self.image(i) for i in range(1, len(self.values)))

    def labels(self) -> dict:
        return {
            "h": self.group.label(self.h_image),
            "x": [self.group.label(g) for g in self.meridian_images],
        }

    @staticmethod
    def from_labels(group: FiniteGroup, data: Mapping) -> Representation:
        vals = [group.parse_label(data["h"]).index]
        vals += [group.parse_label(s).index for s in data["x"]]
        return Representation(values=tuple(vals), group=group)


@dataclass(frozen=True)
class SearchConfig:
    """How to run a count: prescribed h image, engine, and output policy.

    ``witness_limit=None`` materializes every representation found.
    """

    h_image: GroupElement
    engine: str = "backtracking"  # or "oracle"
    witness_limit: int | None = 1024
    deterministic: bool = True
    threads: int | None = None  # None: honor TWISTSPIN_THREADS (default 1)

    def __post_init__(self) -> None:
        if self.engine not in ("backtracking", "oracle"):
            raise EnumerationError(f"unknown engine {self.engine!r}")
        if self.witness_limit is not None and self.witness_limit < 0:
            raise EnumerationError("witness_limit must be >= 0")


def evaluate_word(word: Word, assignment: Mapping[int, GroupElement]) -> GroupElement:
    """Product of generator images with exponents; the empty word is the identity."""
    result: GroupElement | None = None
    group: FiniteGroup | None = None
    for gen, sign in word:
        if gen not in assignment:
            raise EnumerationError(f"word references unassigned generator {gen}")
        g = assignment[gen]
        if sign < 0:
            g = g.inverse()
        if result is None:
            result, group = g, g.group
        else:
            result = result * g
    if result is None:
        values = list(assignment.values())
        if not values:
            raise EnumerationError("cannot evaluate the empty word without a group")
        return values[0].group.identity
    return result


# -- program compilation -------------------------------------------------------


@dataclass
class _Program:
    kinds: np.ndarray
    args: np.ndarray
    data_off: np.ndarray
    data_len: np.ndarray
    data: np.ndarray
    init_vals: np.ndarray
    n_slots: int

    @staticmethod
    def assemble(
        instrs: Sequence[tuple[int, int, Sequence[int]]], init_vals: Sequence[int]
    ) -> _Program:
        kinds, args, offs, lens, data = [], [], [], [], []
        for kind, arg, payload in instrs:
            kinds.append(kind)
            args.append(arg)
            offs.append(len(data))
            lens.append(len(payload))
            data.extend(payload)
        return _Program(
            kinds=np.asarray(kinds, dtype=np.int32),
            args=np.asarray(args, dtype=np.int32),
            data_off=np.asarray(offs, dtype=np.int32),
            data_len=np.asarray(lens, dtype=np.int32),
            data=np.asarray(data, dtype=np.int32),
            init_vals=np.asarray(init_vals, dtype=np.int32),
            n_slots=len(init_vals),
        )


def _encode_word(word: Iterable[tuple[int, int]]) -> list[int]:
    return [sign * (gen + 1) for gen, sign in word]


def _solve_for(word: Word, target: int) -> list[int]:
    """Rearrange word = 1 for a generator occurring exactly once.

    word = P t^s S = 1 gives t = (P^-1 S^-1)^s, encoded as a kernel word over
    the remaining slots.
    """
    syms = word.syms
    pos = [i for i, (g, _) in enumerate(syms) if g == target]
    if len(pos) != 1:
        raise EnumerationError("solve target must occur exactly once")
    i = pos[0]
    sign = syms[i][1]
    prefix, suffix = syms[:i], syms[i + 1 :]
    inv = lambda part: [(g, -s) for g, s in reversed(part)]
    if sign == 1:
        solved = inv(prefix) + inv(suffix)
    else:
        solved = list(suffix) + list(prefix)
    return _encode_word(solved)


def _eval_static(word: Word, values: dict[int, int], group: FiniteGroup) -> int:
    v = group.identity_index
    mul, inv = group.mul_table, group.inv_table
    for gen, sign in word:
        e = values[gen]
        if sign < 0:
            e = int(inv[e])
        v = int(mul[v, e])
    return v


def _compile_oracle(pres: BtsPresentation, group: FiniteGroup, h_index: int) -> _Program:
    l = pres.num_generators
    full = list(range(group.order))
    instrs: list[tuple[int, int, Sequence[int]]] = [
        (_LOOP, slot, full) for slot in range(1, l + 1)
    ]
    instrs += [(_CHECK, -1, _encode_word(w)) for w in pres.relators]
    return _Program.assemble(instrs, [h_index] + [0] * l)


def _compile_backtracking(
    pres: BtsPresentation, group: FiniteGroup, h_index: int
) -> _Program:
    """Propagation plan: searched generators get pre-filtered domains, the rest
    are derived; checks run as soon as their generators are known."""
    l = pres.num_generators
    relators = pres.relators
    known: set[int] = {H}
    consumed: set[int] = set()
    instrs: list[tuple[int, int, Sequence[int]]] = []

    def propagate() -> None:
        changed = True
        while changed:
            changed = False
            for ri, w in enumerate(relators):
                if ri in consumed:
                    continue
                unknown = [g for g, _ in w if g not in known]
                if not unknown:
                    instrs.append((_CHECK, -1, _encode_word(w)))
                    consumed.add(ri)
                    changed = True
                elif len(unknown) == 1:
                    target = unknown[0]
                    instrs.append((_DERIVE, target, _solve_for(w, target)))
                    known.add(target)
                    consumed.add(ri)
                    changed = True

    propagate()
    while len(known) <= l:
        slot = min(g for g in range(1, l + 1) if g not in known)
        # relators touching only h and this generator filter its domain up front
        domain = list(range(group.order))
        for ri, w in enumerate(relators):
            if ri in consumed:
                continue
            if w.generators() <= {H, slot}:
                domain = [
                    v
                    for v in domain
                    if _eval_static(w, {H: h_index, slot: v}, group)
                    == group.identity_index
                ]
                consumed.add(ri)
        instrs.append((_LOOP, slot, domain))
        known.add(slot)
        propagate()
    if len(consumed) != len(relators):  # pragma: no cover - plan invariant
        raise EnumerationError("compilation left relators unscheduled")
    return _Program.assemble(instrs, [h_index] + [0] * l)


# -- execution -----------------------------------------------------------------


def _run(program: _Program, group: FiniteGroup, witness_limit: int) -> tuple[int, np.ndarray]:
    return kernels.run_program(
        group.mul_table,
        group.inv_table,
        group.identity_index,
        program.init_vals,
        program.kinds,
        program.args,
        program.data_off,
        program.data_len,
        program.data,
        witness_limit,
    )


def _run_sharded(
    program: _Program, group: FiniteGroup, witness_limit: int, threads: int
) -> tuple[int, np.ndarray]:
    """Split the outermost loop across worker threads; results are merged in
    domain order, so the output is identical to a single-threaded run."""
    if (
        threads <= 1
        or len(program.kinds) == 0
        or program.kinds[0] != _LOOP
        or program.data_len[0] < 2
    ):
        return _run(program, group, witness_limit)
    first_len = int(program.data_len[0])
    first_off = int(program.data_off[0])
    domain = program.data[first_off : first_off + first_len]
    chunks = np.array_split(domain, min(threads, first_len))

    def shard(chunk: np.ndarray) -> tuple[int, np.ndarray]:
        # same program, with the outermost domain replaced by this chunk
        # (appended to the data block so other offsets stay valid)
        off = program.data_off.copy()
        ln = program.data_len.copy()
        off[0] = len(program.data)
        ln[0] = len(chunk)
        sub = _Program(
            kinds=program.kinds,
            args=program.args,
            data_off=off,
            data_len=ln,
            data=np.concatenate([program.data, chunk.astype(np.int32)]),
            init_vals=program.init_vals,
            n_slots=program.n_slots,
        )
        return _run(sub, group, witness_limit)

    with ThreadPoolExecutor(max_workers=len(chunks)) as pool:
        results = list(pool.map(shard, chunks))
    count = sum(c for c, _ in results)
    rows = [w for _, w in results if len(w)]
    merged = (
        np.concatenate(rows)[:witness_limit]
        if rows
        else np.empty((0, program.n_slots), dtype=np.int32)
    )
    return count, merged


def _execute(
    program: _Program,
    group: FiniteGroup,
    witness_limit: int | None,
    deterministic: bool,
    threads: int,
) -> tuple[int, list[Representation], bool]:
    """Run a program; returns (count, witnesses, witnesses_complete).

    witness_limit=None materializes every solution.  The witness buffer for
    the first pass is modest; if the exact count turns out larger (and still
    under the requested limit), the search reruns once with an exact buffer.
    """
    desired = float("inf") if witness_limit is None else witness_limit
    first = int(min(desired, 4096))
    count, rows = _run_sharded(program, group, first, threads)
    wanted = int(min(count, desired))
    if wanted > len(rows):
        count, rows = _run_sharded(program, group, wanted, threads)
    complete = count == len(rows)
    reps = [Representation(values=tuple(int(v) for v in row), group=group) for row in rows]
    if deterministic:
        reps.sort()
    return count, reps, complete


def _check_inputs(
    pres: BtsPresentation, group: FiniteGroup, h_image: GroupElement
) -> int:
    if h_image.group.descriptor != group.descriptor:
        raise EnumerationError(
            f"h image lives in {h_image.group.descriptor}, not {group.descriptor}"
        )
    return h_image.index


def enumerate_oracle(
    pres: BtsPresentation, group: FiniteGroup, h_image: GroupElement
) -> list[Representation]:
    """All representations, by plain exhaustion over G^l; complete and ordered."""
    h_index = _check_inputs(pres, group, h_image)
    states = group.order ** pres.num_generators
    if states > ORACLE_STATE_CAP:
        raise OracleGuardError(states)
    program = _compile_oracle(pres, group, h_index)
    _, reps, complete = _execute(program, group, None, True, kernels.default_threads())
    assert complete
    return reps


def enumerate_backtracking(
    pres: BtsPresentation, group: FiniteGroup, h_image: GroupElement
) -> list[Representation]:
    """Same output as the oracle, via constraint propagation; no size guard."""
    h_index = _check_inputs(pres, group, h_image)
    program = _compile_backtracking(pres, group, h_index)
    _, reps, complete = _execute(program, group, None, True, kernels.default_threads())
    assert complete
    return reps


@dataclass(frozen=True)
class CountReport:
    """Result of one counting run, serializable and byte-stable.

    ``runtime_ms`` is measured but excluded from canonical serialization
    unless explicitly requested, so that identical inputs produce identical
    bytes.
    """

    knot: str
    m: int
    n: int
    group: str
    h_image: str
    beta: int
    count: int
    witnesses: tuple[Representation, ...]
    witnesses_complete: bool
    engine: str
    runtime_ms: float | None = None

    def to_json_dict(self, include_runtime: bool = False) -> dict:
        return {
            "knot": self.knot,
            "m": self.m,
            "n": self.n,
            "group": self.group,
            "h_image": self.h_image,
            "beta": self.beta,
            "count": self.count,
            "witnesses": [w.labels() for w in self.witnesses],
            "witnesses_complete": self.witnesses_complete,
            "engine": self.engine,
            "runtime_ms": self.runtime_ms if include_runtime else None,
        }

    @staticmethod
    def from_json_dict(data: Mapping) -> CountReport:
        group = group_from_descriptor(data["group"])
        witnesses = tuple(Representation.from_labels(group, w) for w in data["witnesses"])
        return CountReport(
            knot=data["knot"],
            m=int(data["m"]),
            n=int(data["n"]),
            group=data["group"],
            h_image=group.label(group.parse_label(data["h_image"])),
            beta=int(data["beta"]),
            count=int(data["count"]),
            witnesses=witnesses,
            witnesses_complete=bool(data["witnesses_complete"]),
            engine=data["engine"],
            runtime_ms=data.get("runtime_ms"),
        )


def count_reps(
    pres: BtsPresentation, group: FiniteGroup, config: SearchConfig
) -> CountReport:
    """Exact count plus a witness list truncated to ``config.witness_limit``."""
    h_index = _check_inputs(pres, group, config.h_image)
    start = time.perf_counter()
    if config.engine == "oracle":
        states = group.order ** pres.num_generators
        if states > ORACLE_STATE_CAP:
            raise OracleGuardError(states)
        program = _compile_oracle(pres, group, h_index)
    else:
        program = _compile_backtracking(pres, group, h_index)
    threads = config.threads if config.threads is not None else kernels.default_threads()
    count, reps, complete = _execute(
        program, group, config.witness_limit, config.deterministic, threads
    )
    runtime_ms = (time.perf_counter() - start) * 1000.0
    return CountReport(
        knot=pres.base.name,
        m=pres.m,
        n=pres.n,
        group=group.descriptor,
        h_image=group.label(config.h_image),
        beta=pres.beta,
        count=count,
        witnesses=tuple(reps),
        witnesses_complete=complete,
        engine=config.engine,
        runtime_ms=runtime_ms,
    )
