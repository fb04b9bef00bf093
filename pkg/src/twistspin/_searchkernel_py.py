"""Pure-Python search VM; semantics twin of the compiled kernel.

A compiled program is a flat instruction list over an assignment array
``vals`` of group-element indices (slot 0 is the central generator, slots
1..l the meridians):

    LOOP  (slot, domain)  nest a loop assigning each domain value to slot
    DERIVE(slot, word)    set slot to the value of word (slots already known)
    CHECK (word)          backtrack unless word evaluates to the identity

Word symbols are encoded as +-(slot + 1).  Reaching the end of the program is
a solution: it is counted, and the first ``witness_limit`` solutions (in
search order) are recorded.  Instruction order guarantees every referenced
slot is assigned before use; the engine front end is responsible for that.
"""

from __future__ import annotations

import numpy as np


def run_program(
    mul: np.ndarray,
    inv: np.ndarray,
    identity: int,
    init_vals: np.ndarray,
    kinds: np.ndarray,
    args: np.ndarray,
    data_off: np.ndarray,
    data_len: np.ndarray,
    data: np.ndarray,
    witness_limit: int,
) -> tuple[int, np.ndarray]:
    mul_l = mul.tolist()
    inv_l = inv.tolist()
    vals = list(init_vals.tolist())
    kinds_l = kinds.tolist()
    args_l = args.tolist()
    off_l = data_off.tolist()
    len_l = data_len.tolist()
    data_l = data.tolist()
    n_instr = len(kinds_l)
    n_slots = len(vals)

    count = 0
    witnesses: list[list[int]] = []
    # loop stack entries: (instruction index, position in its domain)
    stack_instr: list[int] = []
    stack_pos: list[int] = []

    def eval_word(off: int, ln: int) -> int:
        v = identity
        row = mul_l
        for idx in range(off, off + ln):
            sym = data_l[idx]
            if sym > 0:
                e = vals[sym - 1]
            else:
                e = inv_l[vals[-sym - 1]]
            v = row[v][e]
        return v

    ip = 0
    while True:
        # forward execution until a check fails or the program ends
        failed = False
        while ip < n_instr:
            kind = kinds_l[ip]
            if kind == 0:  # LOOP
                if len_l[ip] == 0:
                    failed = True
                    break
                stack_instr.append(ip)
                stack_pos.append(0)
                vals[args_l[ip]] = data_l[off_l[ip]]
                ip += 1
            elif kind == 1:  # DERIVE
                vals[args_l[ip]] = eval_word(off_l[ip], len_l[ip])
                ip += 1
            else:  # CHECK
                if eval_word(off_l[ip], len_l[ip]) != identity:
                    failed = True
                    break
                ip += 1
        if not failed:
            count += 1
            if len(witnesses) < witness_limit:
                witnesses.append(vals.copy())
        # backtrack to the innermost loop with untried values
        while stack_instr:
            li = stack_instr[-1]
            pos = stack_pos[-1] + 1
            if pos < len_l[li]:
                stack_pos[-1] = pos
                vals[args_l[li]] = data_l[off_l[li] + pos]
                ip = li + 1
                break
            stack_instr.pop()
            stack_pos.pop()
        else:
            break

    out = np.array(witnesses, dtype=np.int32).reshape(len(witnesses), n_slots)
    return count, out
