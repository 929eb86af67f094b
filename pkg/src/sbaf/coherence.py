"""Strong and weak coherence of argument extensions, and directionality."""

from . import af, kernels
from .errors import ConfigError
from .model import SBAF, sent

TAGS = ("strongly-coherent", "weakly-coherent")
KIND_MODES = {"strong": kernels.STRONGLY_COHERENT, "weak": kernels.WEAKLY_COHERENT}


def closure_violations(E, sb: SBAF, kind):
    """Arguments that ``E`` supports, has no undercut info for and lacks.

    For ``kind="weak"`` only those that ``E`` also defends are reported.
    """
    E = frozenset(E)
    mask = sb.mask(E)
    t = sb.tables
    covered = sb.sentence_mask(sent(E, sb))
    defended = kernels.select(t.n, t.m).defended_by(mask, t.n, t.att_in, t.att_out)
    out = []
    for i, a in enumerate(sb.arguments):
        if mask >> i & 1:
            continue
        if t.prem[i] & ~covered or t.ucut[i] & covered:
            continue
        if kind == "weak" and not defended >> i & 1:
            continue
        out.append(a.id)
    return out


def strong_support_closure(E, sb: SBAF) -> bool:
    return not closure_violations(E, sb, "strong")


def weak_support_closure(E, sb: SBAF) -> bool:
    return not closure_violations(E, sb, "weak")


def is_strongly_coherent(E, sb: SBAF) -> bool:
    return af.check_mask(sb, kernels.STRONGLY_COHERENT, sb.mask(E))


def is_weakly_coherent(E, sb: SBAF) -> bool:
    return af.check_mask(sb, kernels.WEAKLY_COHERENT, sb.mask(E))


def _kind(kind):
    if kind not in KIND_MODES:
        raise ConfigError(f"unknown coherence kind {kind!r}; expected 'strong' or 'weak'")
    return KIND_MODES[kind]


def coherent_masks(kind, sb: SBAF, max_args=af.DEFAULT_MAX_ARGS):
    return af.enumerate_masks(sb, _kind(kind), max_args)


def enumerate_coherent(kind, sb: SBAF, max_args=af.DEFAULT_MAX_ARGS) -> list:
    """Strongly or weakly coherent extensions, canonical order."""
    return [sb.unmask(m) for m in coherent_masks(kind, sb, max_args)]


def acceptable_masks(tag, sb: SBAF, max_args=af.DEFAULT_MAX_ARGS):
    """Extensions of any argument-level tag handled by this module or ``af``."""
    if tag == "strongly-coherent":
        return coherent_masks("strong", sb, max_args)
    if tag == "weakly-coherent":
        return coherent_masks("weak", sb, max_args)
    if tag in af.TAGS:
        return af.enumerate_masks_tagged(tag, sb, max_args)
    raise ConfigError(f"directionality is not defined here for semantics {tag!r}")


def directionality_report(sb: SBAF, U, tag, max_args=af.DEFAULT_MAX_ARGS):
    """Compare ``tag`` on the restriction to ``U`` with projections onto ``U``.

    Returns ``(missing, extra)``: extensions of the restriction that are not
    projections, and projections that are not extensions of the restriction.
    Both are sorted lists of frozensets.
    """
    sub = af.restrict(sb, U, check=True)
    local = {sub.unmask(m) for m in acceptable_masks(tag, sub, max_args)}
    U = frozenset(U)
    projected = {sb.unmask(m) & U for m in acceptable_masks(tag, sb, max_args)}
    key = lambda E: [sb.index[a] for a in sb.ordered(E)]  # noqa: E731
    return sorted(local - projected, key=key), sorted(projected - local, key=key)


def check_directionality(sb: SBAF, U, tag, max_args=af.DEFAULT_MAX_ARGS) -> bool:
    """True iff ``tag`` extensions of the restriction equal the projections.

    Raises :class:`PreconditionError` when arguments outside ``U`` attack or
    support ``U``.
    """
    missing, extra = directionality_report(sb, U, tag, max_args)
    return not missing and not extra


def violation(kind, E, sb: SBAF):
    """First failed clause of strong/weak coherence as a message, or None."""
    _kind(kind)
    msg = af.violation("admissible", E, sb)
    if msg is not None:
        return msg
    missing = closure_violations(E, sb, kind)
    if not missing:
        return None
    if kind == "strong":
        return f"strong support-closure violated: {missing[0]} supported, no undercut info, not member"
    return f"weak support-closure violated: {missing[0]} supported, defended, no undercut info, not member"
