"""Dung semantics over the attack relation of an SBAF (support is ignored)."""

from . import kernels
from .errors import CapExceededError, ConfigError, PreconditionError
from .model import SBAF

DEFAULT_MAX_ARGS = 16

MODES = {
    "conflict-free": kernels.CONFLICT_FREE,
    "admissible": kernels.ADMISSIBLE,
    "complete": kernels.COMPLETE,
}
TAGS = ("conflict-free", "admissible", "complete", "preferred")


def check_cap(count, cap, what="arguments", flag="--max-args"):
    if cap is not None and count > cap:
        raise CapExceededError(what, count, cap, flag)


def _zeros(sb):
    return [0] * len(sb)


def check_mask(sb: SBAF, mode, mask, supp_out=None, att=None):
    """Run the kernel predicate ``mode`` on an argument mask."""
    t = sb.tables
    att_in, att_out = att if att is not None else (t.att_in, t.att_out)
    k = kernels.select(t.n, t.m)
    return k.check_extension(mode, mask, t.n, att_in, att_out, t.prem, t.sent, t.ucut,
                             supp_out if supp_out is not None else _zeros(sb))


def enumerate_masks(sb: SBAF, mode, max_args=DEFAULT_MAX_ARGS, supp_out=None, att=None):
    check_cap(len(sb), max_args)
    t = sb.tables
    att_in, att_out = att if att is not None else (t.att_in, t.att_out)
    k = kernels.select(t.n, t.m)
    return k.enumerate_extensions(mode, t.n, att_in, att_out, t.prem, t.sent, t.ucut,
                                  supp_out if supp_out is not None else _zeros(sb))


def maximal(masks, bits=0):
    return kernels.select(bits).maximal_masks(masks)


def is_conflict_free(E, sb: SBAF) -> bool:
    return check_mask(sb, kernels.CONFLICT_FREE, sb.mask(E))


def defends(E, a, sb: SBAF) -> bool:
    """Every attacker of ``a`` is attacked by some member of ``E``."""
    t = sb.tables
    target = sb.mask([a])
    defended = kernels.select(t.n).defended_by(sb.mask(E), t.n, t.att_in, t.att_out)
    return bool(defended & target)


def is_admissible(E, sb: SBAF) -> bool:
    return check_mask(sb, kernels.ADMISSIBLE, sb.mask(E))


def is_complete(E, sb: SBAF) -> bool:
    return check_mask(sb, kernels.COMPLETE, sb.mask(E))


def is_preferred(E, sb: SBAF, max_args=DEFAULT_MAX_ARGS) -> bool:
    """Admissible and no admissible strict superset exists.

    Needs exhaustive search, so the enumeration cap applies.
    """
    m = sb.mask(E)
    if not check_mask(sb, kernels.ADMISSIBLE, m):
        return False
    return not any(F != m and F & m == m for F in enumerate_masks(sb, kernels.ADMISSIBLE, max_args))


def enumerate_masks_tagged(tag, sb: SBAF, max_args=DEFAULT_MAX_ARGS):
    if tag == "preferred":
        return maximal(enumerate_masks(sb, kernels.ADMISSIBLE, max_args), len(sb))
    if tag not in MODES:
        raise ConfigError(f"unknown semantics {tag!r}; expected one of {', '.join(TAGS)}")
    return enumerate_masks(sb, MODES[tag], max_args)


def enumerate(tag, sb: SBAF, max_args=DEFAULT_MAX_ARGS) -> list:
    """All ``tag`` extensions as frozensets of ids, in canonical order.

    Canonical order is the lexicographic order of the members' positions in
    ``sb.arguments``.  Raises :class:`CapExceededError` above ``max_args``
    arguments (``None`` disables the cap).
    """
    return [sb.unmask(m) for m in enumerate_masks_tagged(tag, sb, max_args)]


def outside_influence(sb: SBAF, U) -> list:
    """Reasons why ``A minus U`` affects ``U``; empty when it does not.

    Attack is binary.  Support is set-valued, so the outside is taken to
    support ``U`` when the sentences of all outside arguments together cover
    the premises of some member of ``U``.
    """
    U = set(U)
    sb.mask(U)
    outside = [a for a in sb.arguments if a.id not in U]
    reasons = [f"{a} attacks {b}" for a, b in sorted(sb.attack, key=_pair_key(sb)) if a not in U and b in U]
    covered = set().union(*(a.sentences for a in outside)) if outside else set()
    for a in sb.arguments:
        if a.id in U and a.premises <= covered:
            reasons.append(f"outside arguments support {a.id}")
    return reasons


def _pair_key(sb):
    return lambda p: (sb.index[p[0]], sb.index[p[1]])


def restrict(sb: SBAF, U, check=False) -> SBAF:
    """Sub-framework over ``U`` with the same language and induced relations.

    With ``check=True`` the unaffectedness side condition (the rest of the
    framework neither attacks nor supports ``U``) is enforced.
    """
    U = set(U)
    sb.mask(U)
    if check:
        reasons = outside_influence(sb, U)
        if reasons:
            raise PreconditionError("restriction is affected from outside: " + "; ".join(reasons))
    names = {aid: s for aid, s in sb.language.names.items() if aid in U}
    language = sb.language if names == sb.language.names else sb.language.with_names(names)
    return SBAF(language, [a for a in sb.arguments if a.id in U])


def violation(tag, E, sb: SBAF, max_args=DEFAULT_MAX_ARGS):
    """First failed clause of ``tag`` for ``E`` as a message, or None."""
    E = frozenset(E)
    mask = sb.mask(E)
    key = _pair_key(sb)
    for a, b in sorted(sb.attack, key=key):
        if a in E and b in E:
            return f"not conflict-free: {a} attacks {b}"
    if tag == "conflict-free":
        return None
    for b, a in sorted(sb.attack, key=lambda p: key((p[1], p[0]))):
        if a in E and not any((c, b) in sb.attack for c in E):
            return f"not admissible: {b} attacks {a} and no member attacks {b}"
    if tag == "admissible":
        return None
    if tag == "complete":
        t = sb.tables
        extra = kernels.select(t.n).defended_by(mask, t.n, t.att_in, t.att_out) & ~mask
        if extra:
            return f"not complete: {sb.ordered(sb.unmask(extra))[0]} is defended but not a member"
        return None
    if tag == "preferred":
        for F in enumerate_masks(sb, kernels.ADMISSIBLE, max_args):
            if F != mask and F & mask == mask:
                return f"not preferred: {{{', '.join(sb.ordered(sb.unmask(F)))}}} is a larger admissible set"
        return None
    raise ConfigError(f"unknown semantics {tag!r}; expected one of {', '.join(TAGS)}")
