# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled search VM; semantics twin of ``_searchkernel_py.run_program``.

See that module for the instruction-set contract.  The main loop runs with
the GIL released so callers may shard the outermost loop across threads.
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()


def run_program(
    mul,
    inv,
    int identity,
    init_vals,
    kinds,
    args,
    data_off,
    data_len,
    data,
    int witness_limit,
):
    cdef cnp.int32_t[:, ::1] mul_v = np.ascontiguousarray(mul, dtype=np.int32)
    cdef cnp.int32_t[::1] inv_v = np.ascontiguousarray(inv, dtype=np.int32)
    cdef cnp.int32_t[::1] kinds_v = np.ascontiguousarray(kinds, dtype=np.int32)
    cdef cnp.int32_t[::1] args_v = np.ascontiguousarray(args, dtype=np.int32)
    cdef cnp.int32_t[::1] off_v = np.ascontiguousarray(data_off, dtype=np.int32)
    cdef cnp.int32_t[::1] len_v = np.ascontiguousarray(data_len, dtype=np.int32)
    cdef cnp.int32_t[::1] data_v = np.ascontiguousarray(data, dtype=np.int32)

    cdef int n_instr = kinds_v.shape[0]
    cdef int n_slots = init_vals.shape[0]
    if witness_limit < 0:
        witness_limit = 0

    vals_arr = np.ascontiguousarray(init_vals, dtype=np.int32).copy()
    cdef cnp.int32_t[::1] vals = vals_arr
    wit_arr = np.empty((witness_limit, max(n_slots, 1)), dtype=np.int32)
    cdef cnp.int32_t[:, ::1] wit = wit_arr
    stack_instr_arr = np.empty(n_instr + 1, dtype=np.int32)
    stack_pos_arr = np.empty(n_instr + 1, dtype=np.int32)
    cdef cnp.int32_t[::1] stack_instr = stack_instr_arr
    cdef cnp.int32_t[::1] stack_pos = stack_pos_arr

    cdef long long count = 0
    cdef int n_wit = 0
    cdef int depth = 0
    cdef int ip = 0
    cdef int kind, li, pos, off, ln, idx, sym, v, e, j
    cdef bint failed, running

    with nogil:
        running = True
        while running:
            failed = False
            while ip < n_instr:
                kind = kinds_v[ip]
                if kind == 0:  # LOOP
                    if len_v[ip] == 0:
                        failed = True
                        break
                    stack_instr[depth] = ip
                    stack_pos[depth] = 0
                    depth += 1
                    vals[args_v[ip]] = data_v[off_v[ip]]
                    ip += 1
                else:
                    off = off_v[ip]
                    ln = len_v[ip]
                    v = identity
                    for idx in range(off, off + ln):
                        sym = data_v[idx]
                        if sym > 0:
                            e = vals[sym - 1]
                        else:
                            e = inv_v[vals[-sym - 1]]
                        v = mul_v[v, e]
                    if kind == 1:  # DERIVE
                        vals[args_v[ip]] = v
                        ip += 1
                    else:  # CHECK
                        if v != identity:
                            failed = True
                            break
                        ip += 1
            if not failed:
                count += 1
                if n_wit < witness_limit:
                    for j in range(n_slots):
                        wit[n_wit, j] = vals[j]
                    n_wit += 1
            running = False
            while depth > 0:
                li = stack_instr[depth - 1]
                pos = stack_pos[depth - 1] + 1
                if pos < len_v[li]:
                    stack_pos[depth - 1] = pos
                    vals[args_v[li]] = data_v[off_v[li] + pos]
                    ip = li + 1
                    running = True
                    break
                depth -= 1

    return count, wit_arr[:n_wit, :n_slots].copy()
