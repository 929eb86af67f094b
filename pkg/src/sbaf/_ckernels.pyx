# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels; same signatures as ``_kernels_py``.

Masks are ``uint64_t``: callers route frameworks with more than 63
arguments or sentences to the pure-Python kernels.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc

cdef enum:
    CONFLICT_FREE = 0
    ADMISSIBLE = 1
    COMPLETE = 2
    STRONGLY_COHERENT = 3
    WEAKLY_COHERENT = 4
    SUPPORT_CLOSED_ADMISSIBLE = 5

cdef enum:
    STRONG = 0

BACKEND = "cython"


cdef struct Tab:
    int n
    uint64_t* att_in
    uint64_t* att_out
    uint64_t* prem
    uint64_t* sent
    uint64_t* ucut
    uint64_t* supp_out
    uint64_t* inc
    int m


cdef uint64_t* _load(object values, int size) except NULL:
    cdef uint64_t* out = <uint64_t*> malloc((size if size > 0 else 1) * sizeof(uint64_t))
    cdef int i
    if out == NULL:
        raise MemoryError()
    for i in range(size):
        out[i] = 0 if values is None else <uint64_t> values[i]
    return out


cdef int _open(Tab* t, int n, att_in, att_out, prem, sent, ucut, supp_out, inc, int m) except -1:
    t.n = n
    t.m = m
    t.att_in = t.att_out = t.prem = t.sent = t.ucut = t.supp_out = t.inc = NULL
    try:
        t.att_in = _load(att_in, n)
        t.att_out = _load(att_out, n)
        t.prem = _load(prem, n)
        t.sent = _load(sent, n)
        t.ucut = _load(ucut, n)
        t.supp_out = _load(supp_out, n)
        t.inc = _load(inc, m)
    except BaseException:
        _close(t)
        raise
    return 0


cdef void _close(Tab* t):
    free(t.att_in)
    free(t.att_out)
    free(t.prem)
    free(t.sent)
    free(t.ucut)
    free(t.supp_out)
    free(t.inc)


cdef inline uint64_t _union(uint64_t E, uint64_t* table) nogil:
    cdef uint64_t out = 0
    cdef int i = 0
    while E:
        if E & 1:
            out |= table[i]
        E >>= 1
        i += 1
    return out


cdef inline uint64_t _defended(uint64_t E, Tab* t) nogil:
    cdef uint64_t hit = _union(E, t.att_out)
    cdef uint64_t out = 0
    cdef int a
    for a in range(t.n):
        if t.att_in[a] & ~hit == 0:
            out |= (<uint64_t> 1) << a
    return out


cdef bint _check(int mode, uint64_t E, Tab* t) nogil:
    cdef uint64_t hit = _union(E, t.att_out)
    cdef uint64_t covered
    cdef uint64_t bit
    cdef int a
    if hit & E:
        return False
    if mode == CONFLICT_FREE:
        return True
    for a in range(t.n):
        bit = (<uint64_t> 1) << a
        if E & bit and t.att_in[a] & ~hit:
            return False
    if mode == ADMISSIBLE:
        return True
    if mode == COMPLETE:
        for a in range(t.n):
            bit = (<uint64_t> 1) << a
            if not (E & bit) and t.att_in[a] & ~hit == 0:
                return False
        return True
    if mode == SUPPORT_CLOSED_ADMISSIBLE:
        for a in range(t.n):
            bit = (<uint64_t> 1) << a
            if E & bit and t.supp_out[a] & ~E:
                return False
        return True
    covered = _union(E, t.sent)
    for a in range(t.n):
        bit = (<uint64_t> 1) << a
        if E & bit:
            continue
        if t.prem[a] & ~covered or t.ucut[a] & covered:
            continue
        if mode == STRONGLY_COHERENT:
            return False
        if t.att_in[a] & ~hit == 0:
            return False
    return True


cdef uint64_t _arg_s(uint64_t S, Tab* t) nogil:
    cdef uint64_t out = 0
    cdef int a
    for a in range(t.n):
        if t.prem[a] & ~S == 0 and t.ucut[a] & S == 0:
            out |= (<uint64_t> 1) << a
    return out


cdef uint64_t _init(uint64_t S, Tab* t) nogil:
    cdef uint64_t E = 0
    cdef uint64_t F
    cdef int a
    for a in range(t.n):
        if t.sent[a] & ~S == 0 and t.ucut[a] & S == 0:
            E |= (<uint64_t> 1) << a
    while True:
        F = E & _defended(E, t)
        if F == E:
            return E
        E = F


cdef uint64_t _arg_w(uint64_t S, Tab* t) nogil:
    cdef uint64_t strong = _arg_s(S, t)
    cdef uint64_t E = _init(S, t)
    cdef uint64_t F
    while True:
        F = strong & _defended(E, t)
        if F == E:
            return E
        E = F


cdef bint _adequate(int kind, uint64_t S, Tab* t) nogil:
    cdef uint64_t E
    if _union(S, t.inc) & S:
        return False
    if kind == STRONG:
        E = _arg_s(S, t)
        if E & ~_defended(E, t):
            return False
    else:
        E = _arg_w(S, t)
    return _union(E, t.sent) & ~S == 0


def defended_by(E, int n, att_in, att_out):
    cdef Tab t
    _open(&t, n, att_in, att_out, None, None, None, None, None, 0)
    try:
        return _defended(<uint64_t> E, &t)
    finally:
        _close(&t)


def is_conflict_free(E, att_out):
    cdef Tab t
    _open(&t, len(att_out), None, att_out, None, None, None, None, None, 0)
    try:
        return _union(<uint64_t> E, t.att_out) & (<uint64_t> E) == 0
    finally:
        _close(&t)


def check_extension(int mode, E, int n, att_in, att_out, prem, sent, ucut, supp_out):
    cdef Tab t
    _open(&t, n, att_in, att_out, prem, sent, ucut, supp_out, None, 0)
    try:
        return _check(mode, <uint64_t> E, &t)
    finally:
        _close(&t)


def enumerate_extensions(int mode, int n, att_in, att_out, prem, sent, ucut, supp_out):
    cdef Tab t
    cdef uint64_t* masks = <uint64_t*> malloc((n + 1) * sizeof(uint64_t))
    cdef int* nexts = <int*> malloc((n + 1) * sizeof(int))
    cdef int depth = 0
    cdef int j
    cdef uint64_t E, F, bit
    out = []
    if masks == NULL or nexts == NULL:
        free(masks)
        free(nexts)
        raise MemoryError()
    _open(&t, n, att_in, att_out, prem, sent, ucut, supp_out, None, 0)
    try:
        if _check(mode, 0, &t):
            out.append(0)
        masks[0] = 0
        nexts[0] = 0
        while depth >= 0:
            j = nexts[depth]
            if j >= n:
                depth -= 1
                continue
            nexts[depth] = j + 1
            E = masks[depth]
            bit = (<uint64_t> 1) << j
            if t.att_out[j] & (E | bit) or t.att_in[j] & E:
                continue
            F = E | bit
            if _check(mode, F, &t):
                out.append(F)
            depth += 1
            masks[depth] = F
            nexts[depth] = j + 1
        return out
    finally:
        _close(&t)
        free(masks)
        free(nexts)


def maximal_masks(masks):
    cdef Py_ssize_t k = len(masks)
    cdef uint64_t* xs = <uint64_t*> malloc((k if k else 1) * sizeof(uint64_t))
    cdef Py_ssize_t i, j
    cdef uint64_t x
    cdef bint dominated
    if xs == NULL:
        raise MemoryError()
    try:
        for i in range(k):
            xs[i] = <uint64_t> masks[i]
        out = []
        for i in range(k):
            x = xs[i]
            dominated = False
            for j in range(k):
                if xs[j] != x and xs[j] & x == x:
                    dominated = True
                    break
            if not dominated:
                out.append(x)
        return out
    finally:
        free(xs)


def arg_s(S, int n, prem, ucut):
    cdef Tab t
    _open(&t, n, None, None, prem, None, ucut, None, None, 0)
    try:
        return _arg_s(<uint64_t> S, &t)
    finally:
        _close(&t)


def init_set(S, int n, att_in, att_out, sent, ucut):
    cdef Tab t
    _open(&t, n, att_in, att_out, None, sent, ucut, None, None, 0)
    try:
        return _init(<uint64_t> S, &t)
    finally:
        _close(&t)


def arg_w_iterates(S, int n, att_in, att_out, prem, sent, ucut):
    cdef Tab t
    cdef uint64_t strong, E, F
    _open(&t, n, att_in, att_out, prem, sent, ucut, None, None, 0)
    try:
        strong = _arg_s(<uint64_t> S, &t)
        E = _init(<uint64_t> S, &t)
        out = [E]
        while True:
            F = strong & _defended(E, &t)
            if F == E:
                return out
            out.append(F)
            E = F
    finally:
        _close(&t)


def is_compatible(S, inc):
    cdef Tab t
    _open(&t, 0, None, None, None, None, None, None, inc, len(inc))
    try:
        return _union(<uint64_t> S, t.inc) & (<uint64_t> S) == 0
    finally:
        _close(&t)


def check_adequate(int kind, S, int n, att_in, att_out, prem, sent, ucut, inc):
    cdef Tab t
    _open(&t, n, att_in, att_out, prem, sent, ucut, None, inc, len(inc))
    try:
        return _adequate(kind, <uint64_t> S, &t)
    finally:
        _close(&t)


def enumerate_adequate(int kind, int m, int n, att_in, att_out, prem, sent, ucut, inc):
    cdef Tab t
    cdef uint64_t* masks = <uint64_t*> malloc((m + 1) * sizeof(uint64_t))
    cdef int* nexts = <int*> malloc((m + 1) * sizeof(int))
    cdef int depth = 0
    cdef int j
    cdef uint64_t S, T, bit
    out = []
    if masks == NULL or nexts == NULL:
        free(masks)
        free(nexts)
        raise MemoryError()
    _open(&t, n, att_in, att_out, prem, sent, ucut, None, inc, m)
    try:
        if _adequate(kind, 0, &t):
            out.append(0)
        masks[0] = 0
        nexts[0] = 0
        while depth >= 0:
            j = nexts[depth]
            if j >= m:
                depth -= 1
                continue
            nexts[depth] = j + 1
            S = masks[depth]
            bit = (<uint64_t> 1) << j
            if t.inc[j] & (S | bit):
                continue
            T = S | bit
            if _adequate(kind, T, &t):
                out.append(T)
            depth += 1
            masks[depth] = T
            nexts[depth] = j + 1
        return out
    finally:
        _close(&t)
        free(masks)
        free(nexts)
