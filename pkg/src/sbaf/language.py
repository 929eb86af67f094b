"""Sentence-level semantics: argument sets of sentence sets, adequacy, confidence.

Language extensions are frozensets of sentence ids drawn from Sent(A).
"""

from dataclasses import dataclass

from . import af, kernels
from .coherence import is_strongly_coherent, is_weakly_coherent
from .errors import ConfigError, PreconditionError
from .model import SBAF, restrict_language_check

DEFAULT_MAX_SENTS = 18
KINDS = ("strong", "weak")


@dataclass(frozen=True)
class FixpointTrace:
    """Iteration of the characteristic function from Init(S).

    ``iterates[0]`` is ``init`` and ``iterates[-1]`` is ``fixpoint``; the
    sequence is strictly increasing.
    """
    init: frozenset
    iterates: tuple
    fixpoint: frozenset


def _kernel(sb):
    t = sb.tables
    return kernels.select(t.n, t.m), t


def _smask(S, sb):
    return sb.sentence_mask(restrict_language_check(sb, S))


def _kind(kind):
    if kind not in KINDS:
        raise ConfigError(f"unknown kind {kind!r}; expected 'strong' or 'weak'")
    return kernels.STRONG if kind == "strong" else kernels.WEAK


def compatible_mask(S, sb):
    k, t = _kernel(sb)
    return k.is_compatible(S, t.inc)


def is_compatible(S, sb: SBAF) -> bool:
    """No two sentences of ``S`` are incompatible (a sentence may clash with itself)."""
    return compatible_mask(_smask(S, sb), sb)


def arg_s_mask(S, sb):
    k, t = _kernel(sb)
    return k.arg_s(S, t.n, t.prem, t.ucut)


def arg_s(S, sb: SBAF) -> frozenset:
    """Arguments whose premises lie in S and whose name S does not contradict."""
    return sb.unmask(arg_s_mask(_smask(S, sb), sb))


def characteristic_mask(S, E, sb):
    k, t = _kernel(sb)
    return arg_s_mask(S, sb) & k.defended_by(E, t.n, t.att_in, t.att_out)


def characteristic(S, E, sb: SBAF) -> frozenset:
    """Members of Arg_s(S) that ``E`` defends."""
    return sb.unmask(characteristic_mask(_smask(S, sb), sb.mask(E), sb))


def _require_compatible(S, sb):
    if not compatible_mask(S, sb):
        raise PreconditionError(
            "sentence set is not compatible: " + ", ".join(sorted(sb.unmask_sentences(S))))


def init_mask(S, sb):
    _require_compatible(S, sb)
    k, t = _kernel(sb)
    return k.init_set(S, t.n, t.att_in, t.att_out, t.sent, t.ucut)


def init(S, sb: SBAF) -> frozenset:
    """Largest admissible subset of the arguments lying entirely inside ``S``."""
    return sb.unmask(init_mask(_smask(S, sb), sb))


def arg_w_iterates(S, sb):
    _require_compatible(S, sb)
    k, t = _kernel(sb)
    return k.arg_w_iterates(S, t.n, t.att_in, t.att_out, t.prem, t.sent, t.ucut)


def arg_w_mask(S, sb):
    return arg_w_iterates(S, sb)[-1]


def arg_w(S, sb: SBAF) -> FixpointTrace:
    """Least fixpoint of the characteristic function above Init(S).

    Computed by iterating from Init(S); each iterate is admissible and the
    chain is increasing, so the first repeat is the least fixpoint.
    """
    its = tuple(sb.unmask(m) for m in arg_w_iterates(_smask(S, sb), sb))
    return FixpointTrace(its[0], its, its[-1])


def adequate_mask(kind, S, sb):
    k, t = _kernel(sb)
    return k.check_adequate(_kind(kind), S, t.n, t.att_in, t.att_out, t.prem, t.sent, t.ucut, t.inc)


def is_strongly_adequate(S, sb: SBAF) -> bool:
    return adequate_mask("strong", _smask(S, sb), sb)


def is_weakly_adequate(S, sb: SBAF) -> bool:
    return adequate_mask("weak", _smask(S, sb), sb)


def adequacy_violation(kind, S, sb: SBAF):
    """First failed clause of strong/weak adequacy as a message, or None."""
    S = restrict_language_check(sb, S)
    sm = sb.sentence_mask(S)
    for s in sorted(S):
        clash = sorted(sb.language.incompatible(s) & S)
        if clash:
            return f"not compatible: {s} is incompatible with {clash[0]}"
    if kind == "strong":
        E = arg_s(S, sb)
        k, t = _kernel(sb)
        undefended = sb.mask(E) & ~k.defended_by(sb.mask(E), t.n, t.att_in, t.att_out)
        if undefended:
            return f"strong argument set does not defend {sb.ordered(sb.unmask(undefended))[0]}"
    else:
        E = sb.unmask(arg_w_mask(sm, sb))
    for aid in sb.ordered(E):
        missing = sorted(sb[aid].sentences - S)
        if missing:
            return f"sentence-closure violated: {aid} is accepted but {missing[0]} is not in the set"
    return None


def adequate_masks(kind, sb: SBAF, max_sents=DEFAULT_MAX_SENTS):
    t = sb.tables
    af.check_cap(t.m, max_sents, "sentences", "--max-sents")
    k = kernels.select(t.n, t.m)
    return k.enumerate_adequate(_kind(kind), t.m, t.n, t.att_in, t.att_out, t.prem, t.sent, t.ucut, t.inc)


def enumerate_adequate(kind, sb: SBAF, max_sents=DEFAULT_MAX_SENTS) -> list:
    """Strongly or weakly adequate language extensions, canonical order.

    Canonical order is lexicographic over positions in ``sb.universe``.
    """
    return [sb.unmask_sentences(m) for m in adequate_masks(kind, sb, max_sents)]


def confident_adequate_masks(kind, sb, max_sents=DEFAULT_MAX_SENTS):
    return af.maximal(adequate_masks(kind, sb, max_sents), sb.tables.m)


def confident_adequate(kind, sb: SBAF, max_sents=DEFAULT_MAX_SENTS) -> list:
    """The subset-maximal adequate language extensions."""
    return [sb.unmask_sentences(m) for m in confident_adequate_masks(kind, sb, max_sents)]


def induced_mask(kind, S, sb):
    return arg_s_mask(S, sb) if kind == "strong" else arg_w_mask(S, sb)


def confident_coherent_masks(kind, sb, max_sents=DEFAULT_MAX_SENTS, max_args=af.DEFAULT_MAX_ARGS):
    af.check_cap(len(sb), max_args)
    coherent = is_strongly_coherent if kind == "strong" else is_weakly_coherent
    seen = set()
    for S in confident_adequate_masks(kind, sb, max_sents):
        E = induced_mask(kind, S, sb)
        if E not in seen and coherent(sb.unmask(E), sb):
            seen.add(E)
    return sorted(seen, key=lambda m: [i for i in range(len(sb)) if m >> i & 1])


def confident_coherent(kind, sb: SBAF, max_sents=DEFAULT_MAX_SENTS, max_args=af.DEFAULT_MAX_ARGS) -> list:
    """Coherent extensions induced by some confident adequate language extension.

    Several confident sentence sets may induce the same extension; each
    extension is listed once, in canonical argument order.
    """
    return [sb.unmask(m) for m in confident_coherent_masks(kind, sb, max_sents, max_args)]
