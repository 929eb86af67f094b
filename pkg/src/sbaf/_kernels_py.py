"""Pure-Python bitmask kernels.

Every function here has a twin with the same signature in ``_ckernels.pyx``.
Sets of arguments and sets of sentences are ints (bit i = element i).  The
per-framework tables are plain lists:

    att_in[i]   attackers of argument i
    att_out[i]  arguments attacked by i
    prem[i]     premises of i (sentence mask)
    sent[i]     premises and conclusion of i
    ucut[i]     sentences incompatible with the name of i
    supp_out[i] binary support successors of i (BAF only)
    inc[s]      sentences incompatible with sentence s
"""

CONFLICT_FREE = 0
ADMISSIBLE = 1
COMPLETE = 2
STRONGLY_COHERENT = 3
WEAKLY_COHERENT = 4
SUPPORT_CLOSED_ADMISSIBLE = 5

STRONG = 0
WEAK = 1

BACKEND = "python"


def _union(E, table):
    out = 0
    i = 0
    while E:
        if E & 1:
            out |= table[i]
        E >>= 1
        i += 1
    return out


def defended_by(E, n, att_in, att_out):
    """Mask of arguments whose every attacker is attacked by ``E``."""
    hit = _union(E, att_out)
    out = 0
    for a in range(n):
        if att_in[a] & ~hit == 0:
            out |= 1 << a
    return out


def is_conflict_free(E, att_out):
    return _union(E, att_out) & E == 0


def check_extension(mode, E, n, att_in, att_out, prem, sent, ucut, supp_out):
    """Decide one of the argument-level semantics for the set ``E``."""
    hit = _union(E, att_out)
    if hit & E:
        return False
    if mode == CONFLICT_FREE:
        return True
    # defended(a) <=> every attacker of a is hit by E
    for a in range(n):
        if E >> a & 1 and att_in[a] & ~hit:
            return False
    if mode == ADMISSIBLE:
        return True
    if mode == COMPLETE:
        for a in range(n):
            if not E >> a & 1 and att_in[a] & ~hit == 0:
                return False
        return True
    if mode == SUPPORT_CLOSED_ADMISSIBLE:
        for a in range(n):
            if E >> a & 1 and supp_out[a] & ~E:
                return False
        return True
    covered = _union(E, sent)
    for a in range(n):
        if E >> a & 1:
            continue
        if prem[a] & ~covered or ucut[a] & covered:
            continue
        if mode == STRONGLY_COHERENT:
            return False
        if att_in[a] & ~hit == 0:
            return False
    return True


def enumerate_extensions(mode, n, att_in, att_out, prem, sent, ucut, supp_out):
    """All sets satisfying ``mode``, in lexicographic order of index tuples.

    Depth-first over conflict-free sets only: adding a member that clashes
    with the current set prunes the whole subtree.
    """
    out = []
    stack = [(0, 0)]
    if check_extension(mode, 0, n, att_in, att_out, prem, sent, ucut, supp_out):
        out.append(0)
    while stack:
        E, j = stack.pop()
        if j >= n:
            continue
        stack.append((E, j + 1))
        bit = 1 << j
        if att_out[j] & (E | bit) or att_in[j] & E:
            continue
        F = E | bit
        if check_extension(mode, F, n, att_in, att_out, prem, sent, ucut, supp_out):
            out.append(F)
        stack.append((F, j + 1))
    return out


def maximal_masks(masks):
    """Keep the masks with no strict superset in ``masks`` (order preserved)."""
    ordered = sorted(set(masks), key=lambda x: -bin(x).count("1"))
    keep = []
    for x in ordered:
        if not any(x & y == x for y in keep):
            keep.append(x)
    kept = set(keep)
    return [x for x in masks if x in kept]


def arg_s(S, n, prem, ucut):
    out = 0
    for a in range(n):
        if prem[a] & ~S == 0 and ucut[a] & S == 0:
            out |= 1 << a
    return out


def init_set(S, n, att_in, att_out, sent, ucut):
    """Largest admissible subset of the arguments fully inside S.

    The candidate set is conflict-free for compatible S, so shrinking it to
    the members it still defends reaches the largest admissible subset.
    """
    E = 0
    for a in range(n):
        if sent[a] & ~S == 0 and ucut[a] & S == 0:
            E |= 1 << a
    while True:
        F = E & defended_by(E, n, att_in, att_out)
        if F == E:
            return E
        E = F


def arg_w_iterates(S, n, att_in, att_out, prem, sent, ucut):
    """Iterates of R^S from Init(S); the last entry is the fixpoint."""
    strong = arg_s(S, n, prem, ucut)
    E = init_set(S, n, att_in, att_out, sent, ucut)
    out = [E]
    while True:
        F = strong & defended_by(E, n, att_in, att_out)
        if F == E:
            return out
        out.append(F)
        E = F


def is_compatible(S, inc):
    return _union(S, inc) & S == 0


def check_adequate(kind, S, n, att_in, att_out, prem, sent, ucut, inc):
    if not is_compatible(S, inc):
        return False
    if kind == STRONG:
        E = arg_s(S, n, prem, ucut)
        if E & ~defended_by(E, n, att_in, att_out):
            return False
    else:
        E = arg_w_iterates(S, n, att_in, att_out, prem, sent, ucut)[-1]
    return _union(E, sent) & ~S == 0


def enumerate_adequate(kind, m, n, att_in, att_out, prem, sent, ucut, inc):
    """Adequate sentence sets in lexicographic order, pruning incompatibility."""
    out = []
    if check_adequate(kind, 0, n, att_in, att_out, prem, sent, ucut, inc):
        out.append(0)
    stack = [(0, 0)]
    while stack:
        S, j = stack.pop()
        if j >= m:
            continue
        stack.append((S, j + 1))
        bit = 1 << j
        if inc[j] & (S | bit):
            continue
        T = S | bit
        if check_adequate(kind, T, n, att_in, att_out, prem, sent, ucut, inc):
            out.append(T)
        stack.append((T, j + 1))
    return out
