"""Languages, arguments and structured bipolar argumentation frameworks.

Attack and support are never supplied by the user: both are derived from the
premises, conclusions and names of the arguments.  Attack is stored as a
binary relation; support is set-valued (a set of arguments supports an
argument) and is computed on demand.

Internally every framework also carries bitmask tables (one int per argument
or sentence) that the enumeration kernels in :mod:`sbaf.kernels` consume.
"""

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping

from .errors import DomainError, PreconditionError, SBAFError, UnknownIdError

ID_RE = re.compile(r"[A-Za-z0-9_]+\Z")


def check_id(token, kind="id"):
    if not isinstance(token, str) or not ID_RE.match(token):
        raise SBAFError(f"invalid {kind} {token!r}: must match [A-Za-z0-9_]+")
    return token


class Language:
    """Sentences, a symmetric incompatibility map and a partial naming map.

    ``incompatibility`` may be a mapping ``s -> iterable of t`` or an iterable
    of ``(s, t)`` pairs; it is closed under symmetry on construction.
    ``names`` maps argument ids to the sentence naming their inference.
    """

    def __init__(self, sentences: Iterable[str], incompatibility=(), names: Mapping[str, str] = None):
        sents = {check_id(s, "sentence id") for s in sentences}
        pairs = incompatibility.items() if isinstance(incompatibility, Mapping) else incompatibility
        inc = {}
        for s, ts in _expand_pairs(pairs):
            for t in ts:
                for x in (s, t):
                    check_id(x, "sentence id")
                    if x not in sents:
                        raise DomainError(f"incompatibility mentions undeclared sentence {x!r}")
                inc.setdefault(s, set()).add(t)
                inc.setdefault(t, set()).add(s)
        names = dict(names or {})
        for aid, sid in names.items():
            check_id(aid, "argument id")
            if sid not in sents:
                raise DomainError(f"name {sid!r} of argument {aid!r} is not a declared sentence")
        if not sents:
            raise SBAFError("a language needs at least one sentence")
        self.sentences = frozenset(sents)
        self._inc = {s: frozenset(ts) for s, ts in inc.items()}
        self.names = names

    def incompatible(self, s) -> frozenset:
        """The set of sentences incompatible with ``s`` (empty if none)."""
        return self._inc.get(s, frozenset())

    def incompatible_pairs(self):
        """Unordered incompatible pairs as sorted tuples, in sorted order."""
        return sorted({tuple(sorted((s, t))) for s, ts in self._inc.items() for t in ts})

    def name_of(self, aid):
        return self.names.get(aid)

    def undercutters(self, aid) -> frozenset:
        """Sentences incompatible with the name of ``aid``; empty if unnamed."""
        name = self.names.get(aid)
        return self.incompatible(name) if name is not None else frozenset()

    def with_names(self, names):
        return Language(self.sentences, {s: ts for s, ts in self._inc.items()}, names)

    def __eq__(self, other):
        if not isinstance(other, Language):
            return NotImplemented
        return (self.sentences == other.sentences and self._inc == other._inc
                and self.names == other.names)

    def __repr__(self):
        return f"Language({len(self.sentences)} sentences, {len(self.incompatible_pairs())} incompatible pairs)"


def _expand_pairs(pairs):
    for item in pairs:
        s, t = item
        if isinstance(t, str):
            yield s, (t,)
        else:
            yield s, tuple(t)


@dataclass(frozen=True)
class Argument:
    id: str
    premises: frozenset
    conclusion: str

    def __post_init__(self):
        check_id(self.id, "argument id")
        object.__setattr__(self, "premises", frozenset(self.premises))
        if not self.premises:
            raise SBAFError(f"argument {self.id!r} has no premises")

    @property
    def sentences(self) -> frozenset:
        return self.premises | {self.conclusion}

    @property
    def is_minimal(self):
        return self.premises == {self.conclusion}

    def __str__(self):
        return f"{self.id}: {{{', '.join(sorted(self.premises))}}} -> {self.conclusion}"


@dataclass(frozen=True)
class Tables:
    """Bitmask view of a framework.

    Argument masks index ``SBAF.arguments``; sentence masks index
    ``SBAF.universe`` (the sorted Sent(A)).
    """
    n: int
    m: int
    att_in: list
    att_out: list
    prem: list
    sent: list
    ucut: list
    inc: list

    def kernel_args(self):
        return (self.n, self.att_in, self.att_out, self.prem, self.sent, self.ucut)


class SBAF:
    """A finite set of arguments over a language, with derived relations."""

    def __init__(self, language: Language, arguments: Iterable[Argument]):
        self.language = language
        self.arguments = tuple(arguments)
        self.index = {}
        for i, a in enumerate(self.arguments):
            if a.id in self.index:
                raise SBAFError(f"duplicate argument id {a.id!r}")
            self.index[a.id] = i
            for s in a.sentences:
                if s not in language.sentences:
                    raise DomainError(f"argument {a.id!r} uses undeclared sentence {s!r}")
            if a.is_minimal and language.undercutters(a.id):
                raise SBAFError(f"minimal argument {a.id!r} carries a name with incompatibilities")
        self.attack = frozenset(
            (a.id, b.id) for a in self.arguments for b in self.arguments if _derive_attack(a, b, language)
        )

    @cached_property
    def universe(self) -> tuple:
        """Sent(A) in sorted order; language extensions live inside it."""
        return tuple(sorted(set().union(*(a.sentences for a in self.arguments))))

    @cached_property
    def sentence_index(self):
        return {s: i for i, s in enumerate(self.universe)}

    @property
    def ids(self):
        return tuple(a.id for a in self.arguments)

    def __getitem__(self, aid) -> Argument:
        try:
            return self.arguments[self.index[aid]]
        except KeyError:
            raise UnknownIdError(f"unknown argument {aid!r}") from None

    def __contains__(self, aid):
        return aid in self.index

    def __len__(self):
        return len(self.arguments)

    def __eq__(self, other):
        if not isinstance(other, SBAF):
            return NotImplemented
        return self.language == other.language and self.arguments == other.arguments

    def __repr__(self):
        return f"SBAF({len(self)} arguments, {len(self.universe)} sentences in use)"

    # -- mask conversion ------------------------------------------------------

    def mask(self, ids) -> int:
        m = 0
        for aid in ids:
            try:
                m |= 1 << self.index[aid]
            except KeyError:
                raise UnknownIdError(f"unknown argument {aid!r}") from None
        return m

    def unmask(self, mask) -> frozenset:
        return frozenset(a.id for i, a in enumerate(self.arguments) if mask >> i & 1)

    def sentence_mask(self, sentences) -> int:
        m = 0
        for s in sentences:
            try:
                m |= 1 << self.sentence_index[s]
            except KeyError:
                raise DomainError(f"sentence {s!r} is not in Sent(A)") from None
        return m

    def unmask_sentences(self, mask) -> frozenset:
        return frozenset(s for i, s in enumerate(self.universe) if mask >> i & 1)

    def ordered(self, ids):
        """Argument ids sorted by framework position."""
        return sorted(ids, key=self.index.__getitem__)

    @cached_property
    def tables(self) -> Tables:
        n = len(self.arguments)
        att_in, att_out = [0] * n, [0] * n
        for a, b in self.attack:
            i, j = self.index[a], self.index[b]
            att_out[i] |= 1 << j
            att_in[j] |= 1 << i
        universe = set(self.universe)
        prem = [self.sentence_mask(a.premises) for a in self.arguments]
        sent = [self.sentence_mask(a.sentences) for a in self.arguments]
        ucut = [self.sentence_mask(self.language.undercutters(a.id) & universe) for a in self.arguments]
        inc = [self.sentence_mask(self.language.incompatible(s) & universe) for s in self.universe]
        return Tables(n, len(self.universe), att_in, att_out, prem, sent, ucut, inc)


def _derive_attack(a: Argument, b: Argument, language: Language) -> bool:
    c = a.conclusion
    if any(c in language.incompatible(s) for s in b.sentences):
        return True
    return c in language.undercutters(b.id)


def make_sbaf(arguments, incompatibility=(), names=None, sentences=()):
    """Build an SBAF from ``(id, premises, conclusion)`` triples.

    Sentences used by arguments, incompatibilities and names are declared
    automatically.
    """
    args = [a if isinstance(a, Argument) else Argument(a[0], frozenset(a[1]), a[2]) for a in arguments]
    pairs = list(incompatibility.items()) if isinstance(incompatibility, Mapping) else list(incompatibility)
    declared = set(sentences)
    for a in args:
        declared |= a.sentences
    for s, ts in _expand_pairs(pairs):
        declared.add(s)
        declared.update(ts)
    declared.update((names or {}).values())
    return SBAF(Language(declared, pairs, names), args)


def _ids(E, sb):
    if isinstance(E, str):
        raise TypeError("expected a collection of argument ids, got a single string")
    for aid in E:
        if aid not in sb.index:
            raise UnknownIdError(f"unknown argument {aid!r}")
    return E


def sent(E, sb: SBAF) -> frozenset:
    """Sent(E): every premise and conclusion of the members of ``E``."""
    out = set()
    for aid in _ids(E, sb):
        out |= sb[aid].sentences
    return frozenset(out)


def attacks(a, b, sb: SBAF) -> bool:
    sb[a], sb[b]
    return (a, b) in sb.attack


def supports(E, a, sb: SBAF) -> bool:
    return sb[a].premises <= sent(E, sb)


def undercut_info(E, a, sb: SBAF) -> bool:
    """Whether Sent(E) meets the incompatibles of a's name; unnamed -> False."""
    return bool(sb.language.undercutters(sb[a].id) & sent(E, sb))


def minimal_sentences(sb: SBAF) -> frozenset:
    """Sentences s that have a minimal argument <{s}, s> in the framework."""
    return frozenset(a.conclusion for a in sb.arguments if a.is_minimal)


def saturation_requirements(sb: SBAF):
    """Return ``(pairs, undercut_sentences)`` restricted to Sent(A).

    ``pairs`` are the incompatible pairs with both sides in Sent(A) (a
    self-incompatible sentence shows up as ``(s, s)``).
    """
    universe = set(sb.universe)
    pairs = [(s, t) for s, t in sb.language.incompatible_pairs() if s in universe and t in universe]
    undercut = set()
    for a in sb.arguments:
        undercut |= sb.language.undercutters(a.id) & universe
    return pairs, frozenset(undercut)


def is_saturated(sb: SBAF) -> bool:
    have = minimal_sentences(sb)
    pairs, undercut = saturation_requirements(sb)
    return all(s in have or t in have for s, t in pairs) and undercut <= have


def is_strongly_saturated(sb: SBAF) -> bool:
    have = minimal_sentences(sb)
    pairs, undercut = saturation_requirements(sb)
    return all(s in have and t in have for s, t in pairs) and undercut <= have


def strong_saturation_sentences(sb: SBAF) -> list:
    pairs, undercut = saturation_requirements(sb)
    need = set(undercut)
    for s, t in pairs:
        need.update((s, t))
    return sorted(need - minimal_sentences(sb))


def fresh_id(base, taken):
    candidate, k = base, 1
    while candidate in taken:
        k += 1
        candidate = f"{base}_{k}"
    return candidate


def add_minimal_arguments(sb: SBAF, sentences) -> SBAF:
    taken = set(sb.index) | set(sb.language.names)
    extra = []
    for s in sentences:
        aid = fresh_id(f"m_{s}", taken)
        taken.add(aid)
        extra.append(Argument(aid, frozenset([s]), s))
    if not extra:
        return sb
    return SBAF(sb.language, sb.arguments + tuple(extra))


def strongly_saturate(sb: SBAF) -> SBAF:
    """Add unnamed minimal arguments until the framework is strongly saturated.

    Minimal arguments never change Sent(A), so one pass suffices and the
    operation is idempotent.  New ids are ``m_<sentence>``.
    """
    return add_minimal_arguments(sb, strong_saturation_sentences(sb))


def restrict_language_check(sb: SBAF, sentences) -> frozenset:
    """Validate that ``sentences`` lies inside Sent(A) and return it frozen."""
    if isinstance(sentences, str):
        raise TypeError("expected a collection of sentence ids, got a single string")
    S = frozenset(sentences)
    outside = S - set(sb.universe)
    if outside:
        raise DomainError(f"sentences outside Sent(A): {', '.join(sorted(outside))}")
    return S


def require(cond, message):
    if not cond:
        raise PreconditionError(message)
