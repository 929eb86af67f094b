"""Bipolar frameworks with binary deductive support.

Complex attacks close the attack relation under supported attacks
(a supports c, c attacks b) and mediated attacks (b supports c, a attacks c).
d-admissible sets are admissible for the closed relation and closed under
support; d-complete and d-preferred are the plain complete and preferred
semantics of the closed relation.
"""

from dataclasses import dataclass, field
from functools import cached_property

from . import af, kernels
from .errors import ConfigError, SBAFError, UnknownIdError
from .model import SBAF, check_id

SUPPORT_RULES = ("conclusion", "singleton")
TAGS = ("d-admissible", "d-complete", "d-preferred")


@dataclass(frozen=True)
class BAF:
    arguments: tuple
    attack: frozenset = field(default_factory=frozenset)
    support: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "arguments", tuple(self.arguments))
        object.__setattr__(self, "attack", frozenset(self.attack))
        object.__setattr__(self, "support", frozenset(self.support))
        if len(set(self.arguments)) != len(self.arguments):
            raise SBAFError("duplicate argument ids")
        for aid in self.arguments:
            check_id(aid, "argument id")
        known = set(self.arguments)
        for rel, what in ((self.attack, "attack"), (self.support, "support")):
            for a, b in rel:
                if a not in known or b not in known:
                    raise UnknownIdError(f"{what} ({a}, {b}) mentions an undeclared argument")

    @cached_property
    def index(self):
        return {a: i for i, a in enumerate(self.arguments)}

    def mask(self, ids):
        m = 0
        for a in ids:
            try:
                m |= 1 << self.index[a]
            except KeyError:
                raise UnknownIdError(f"unknown argument {a!r}") from None
        return m

    def unmask(self, mask):
        return frozenset(a for i, a in enumerate(self.arguments) if mask >> i & 1)

    def out_masks(self, relation):
        out = [0] * len(self.arguments)
        for a, b in relation:
            out[self.index[a]] |= 1 << self.index[b]
        return out

    def in_masks(self, relation):
        out = [0] * len(self.arguments)
        for a, b in relation:
            out[self.index[b]] |= 1 << self.index[a]
        return out

    @cached_property
    def complex_attack(self) -> frozenset:
        return complex_attacks(self)


def supported_attack(a, b, baf: BAF, rel=None) -> bool:
    """Some c with a supporting c and c attacking b (attacks read from ``rel``)."""
    rel = baf.attack if rel is None else rel
    baf.mask([a, b])
    return any(x == a and (c, b) in rel for x, c in baf.support)


def mediated_attack(a, b, baf: BAF, rel=None) -> bool:
    """Some c with b supporting c and a attacking c."""
    rel = baf.attack if rel is None else rel
    baf.mask([a, b])
    return any(x == b and (a, c) in rel for x, c in baf.support)


def complex_attacks(baf: BAF) -> frozenset:
    """Least relation containing the attacks and closed under both rules."""
    rel = set(baf.attack)
    while True:
        added = set()
        for x, c in baf.support:
            for y, z in rel:
                if y == c:
                    added.add((x, z))       # supported: x supports c, c attacks z
                if z == c:
                    added.add((y, x))       # mediated: x supports c, y attacks c
        if added <= rel:
            return frozenset(rel)
        rel |= added


def _tables(baf: BAF):
    co = baf.complex_attack
    return baf.in_masks(co), baf.out_masks(co), baf.out_masks(baf.support)


def _check(mode, E, baf):
    att_in, att_out, supp_out = _tables(baf)
    n = len(baf.arguments)
    zeros = [0] * n
    return kernels.select(n).check_extension(mode, baf.mask(E), n, att_in, att_out,
                                             zeros, zeros, zeros, supp_out)


def is_d_admissible(E, baf: BAF) -> bool:
    return _check(kernels.SUPPORT_CLOSED_ADMISSIBLE, E, baf)


def is_d_complete(E, baf: BAF) -> bool:
    return _check(kernels.COMPLETE, E, baf)


def is_d_preferred(E, baf: BAF, max_args=af.DEFAULT_MAX_ARGS) -> bool:
    m = baf.mask(E)
    if not _check(kernels.ADMISSIBLE, E, baf):
        return False
    return not any(F != m and F & m == m for F in _enumerate_masks(kernels.ADMISSIBLE, baf, max_args))


def _enumerate_masks(mode, baf, max_args):
    n = len(baf.arguments)
    af.check_cap(n, max_args)
    att_in, att_out, supp_out = _tables(baf)
    zeros = [0] * n
    return kernels.select(n).enumerate_extensions(mode, n, att_in, att_out, zeros, zeros, zeros, supp_out)


def enumerate_d(tag, baf: BAF, max_args=af.DEFAULT_MAX_ARGS) -> list:
    """d-admissible, d-complete or d-preferred extensions in canonical order."""
    if tag == "d-admissible":
        masks = _enumerate_masks(kernels.SUPPORT_CLOSED_ADMISSIBLE, baf, max_args)
    elif tag == "d-complete":
        masks = _enumerate_masks(kernels.COMPLETE, baf, max_args)
    elif tag == "d-preferred":
        masks = af.maximal(_enumerate_masks(kernels.ADMISSIBLE, baf, max_args), len(baf.arguments))
    else:
        raise ConfigError(f"unknown semantics {tag!r}; expected one of {', '.join(TAGS)}")
    return [baf.unmask(m) for m in masks]


def d_violation(tag, E, baf: BAF, max_args=af.DEFAULT_MAX_ARGS):
    """First failed clause for a d-semantics, or None."""
    E = frozenset(E)
    baf.mask(E)
    co = baf.complex_attack
    for a, b in sorted(co):
        if a in E and b in E:
            return f"not conflict-free under complex attacks: {a} attacks {b}"
    for b, a in sorted(co):
        if a in E and not any((c, b) in co for c in E):
            return f"not admissible under complex attacks: {a} is attacked by {b} and nothing in the set attacks {b}"
    if tag == "d-admissible":
        for a, b in sorted(baf.support):
            if a in E and b not in E:
                return f"not closed under support: {a} supports {b}, which is missing"
        return None
    if tag == "d-complete":
        att_in, att_out, _ = _tables(baf)
        defended = kernels.select(len(baf.arguments)).defended_by(baf.mask(E), len(baf.arguments), att_in, att_out)
        for i, a in enumerate(baf.arguments):
            if (defended & ~baf.mask(E)) >> i & 1:
                return f"not complete: {a} is defended but not a member"
        return None
    if tag == "d-preferred":
        if not is_d_preferred(E, baf, max_args):
            return "not preferred: a strictly larger admissible set exists under complex attacks"
        return None
    raise ConfigError(f"unknown semantics {tag!r}")


def baf_from_sbaf(sb: SBAF, support_rule="conclusion") -> BAF:
    """Project an SBAF onto a BAF with binary support.

    ``conclusion``: a supports b iff Conc(a) is a premise of b.
    ``singleton``: a supports b iff Prem(b) is within Sent(a).
    Self-support is never recorded.
    """
    if support_rule not in SUPPORT_RULES:
        raise ConfigError(f"unknown support rule {support_rule!r}; expected one of {', '.join(SUPPORT_RULES)}")
    support = set()
    for a in sb.arguments:
        for b in sb.arguments:
            if a.id == b.id:
                continue
            if support_rule == "conclusion":
                ok = a.conclusion in b.premises
            else:
                ok = b.premises <= a.sentences
            if ok:
                support.add((a.id, b.id))
    return BAF(sb.ids, sb.attack, frozenset(support))
