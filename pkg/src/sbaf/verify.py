"""Brute-force oracles, random frameworks and the proposition suite.

The oracles in this module work on plain Python sets and read the
definitions literally (no bitmasks, no kernels), so they can be used to
cross-check the fast paths.  They are exponential and meant for frameworks
of a handful of arguments.
"""

import itertools
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace

from . import af, coherence, fixtures, kernels, language
from .bipolar import BAF, baf_from_sbaf, enumerate_d
from .errors import CapExceededError, ConfigError, PreconditionError
from .fileformat import emit
from .model import (SBAF, Argument, Language, add_minimal_arguments, is_saturated,
                    is_strongly_saturated, minimal_sentences, saturation_requirements,
                    strongly_saturate)

# -- oracles -----------------------------------------------------------------


def subsets(items):
    items = list(items)
    for r in range(len(items) + 1):
        yield from (frozenset(c) for c in itertools.combinations(items, r))


def oracle_attackers(sb: SBAF, relation=None):
    relation = sb.attack if relation is None else relation
    att = {a: set() for a in sb.ids}
    for x, y in relation:
        att[y].add(x)
    return att


def oracle_defends(E, a, sb: SBAF, relation=None):
    relation = sb.attack if relation is None else relation
    return all(any((c, b) in relation for c in E) for (b, t) in relation if t == a)


def oracle_conflict_free(E, sb: SBAF, relation=None):
    relation = sb.attack if relation is None else relation
    return not any((a, b) in relation for a in E for b in E)


def oracle_admissible(E, sb: SBAF, relation=None):
    return oracle_conflict_free(E, sb, relation) and all(oracle_defends(E, a, sb, relation) for a in E)


def oracle_complete(E, sb: SBAF, relation=None):
    return oracle_admissible(E, sb, relation) and all(
        a in E for a in sb.ids if oracle_defends(E, a, sb, relation))


def oracle_sent(E, sb: SBAF):
    return frozenset().union(*(sb[a].premises | {sb[a].conclusion} for a in E))


def oracle_supports(E, a, sb: SBAF):
    return sb[a].premises <= oracle_sent(E, sb)


def oracle_undercut_info(E, a, sb: SBAF):
    name = sb.language.name_of(a)
    return name is not None and bool(sb.language.incompatible(name) & oracle_sent(E, sb))


def oracle_coherent(kind, E, sb: SBAF):
    if not oracle_admissible(E, sb):
        return False
    for a in sb.ids:
        if a in E or not oracle_supports(E, a, sb) or oracle_undercut_info(E, a, sb):
            continue
        if kind == "strong" or oracle_defends(E, a, sb):
            return False
    return True


def oracle_extensions(pred, sb: SBAF):
    """All subsets of the arguments satisfying ``pred(E)``, as a set."""
    return {E for E in subsets(sb.ids) if pred(E)}


def oracle_semantics(tag, sb: SBAF):
    preds = {
        "conflict-free": lambda E: oracle_conflict_free(E, sb),
        "admissible": lambda E: oracle_admissible(E, sb),
        "complete": lambda E: oracle_complete(E, sb),
        "strongly-coherent": lambda E: oracle_coherent("strong", E, sb),
        "weakly-coherent": lambda E: oracle_coherent("weak", E, sb),
    }
    if tag == "preferred":
        return oracle_maximal(oracle_extensions(preds["admissible"], sb))
    return oracle_extensions(preds[tag], sb)


def oracle_maximal(family):
    family = set(family)
    return {E for E in family if not any(E < F for F in family)}


def oracle_compatible(S, sb: SBAF):
    return not any(t in sb.language.incompatible(s) for s in S for t in S)


def oracle_arg_s(S, sb: SBAF):
    return frozenset(a.id for a in sb.arguments
                     if a.premises <= S and not (sb.language.undercutters(a.id) & S))


def oracle_init(S, sb: SBAF):
    """Largest admissible subset of the candidates, found by brute force.

    Raises ``AssertionError`` if the maximal admissible subsets are not unique.
    """
    cand = [a.id for a in sb.arguments
            if a.sentences <= S and not (sb.language.undercutters(a.id) & S)]
    best = oracle_maximal(E for E in subsets(cand) if oracle_admissible(E, sb))
    assert len(best) == 1, f"maximal admissible subsets not unique: {best}"
    return next(iter(best))


def oracle_characteristic(S, E, sb: SBAF):
    return frozenset(a for a in oracle_arg_s(S, sb) if oracle_defends(E, a, sb))


def oracle_arg_w(S, sb: SBAF, max_args=af.DEFAULT_MAX_ARGS):
    """Least fixpoint above Init(S), by enumerating every superset of Init(S)."""
    af.check_cap(len(sb), max_args)
    S = frozenset(S)
    if not oracle_compatible(S, sb):
        raise PreconditionError("sentence set is not compatible")
    base = oracle_init(S, sb)
    rest = [a for a in sb.ids if a not in base]
    fixpoints = [base | X for X in subsets(rest) if oracle_characteristic(S, base | X, sb) == base | X]
    least = [E for E in fixpoints if all(E <= F for F in fixpoints)]
    assert len(least) == 1, "no least fixpoint above Init(S)"
    return least[0]


def oracle_adequate(kind, S, sb: SBAF):
    S = frozenset(S)
    if not oracle_compatible(S, sb):
        return False
    if kind == "strong":
        E = oracle_arg_s(S, sb)
        if not all(oracle_defends(E, a, sb) for a in E):
            return False
    else:
        E = oracle_arg_w(S, sb, max_args=None)
    return oracle_sent(E, sb) <= S


def oracle_complex_attacks(baf: BAF):
    """Union of the ->^i chain, each step adding supported and mediated attacks."""
    cur = set(baf.attack)
    while True:
        nxt = set(cur)
        for a in baf.arguments:
            for b in baf.arguments:
                for c in baf.arguments:
                    if (a, c) in baf.support and (c, b) in cur:
                        nxt.add((a, b))
                    if (b, c) in baf.support and (a, c) in cur:
                        nxt.add((a, b))
        if nxt == cur:
            return frozenset(cur)
        cur = nxt


# -- generators --------------------------------------------------------------


@dataclass(frozen=True)
class GenConfig:
    """Knobs for :func:`gen_sbaf`; the same config always yields the same framework.

    ``saturation`` is ``None``, ``"weak"`` or ``"strong"`` and is applied by
    construction; ``shape`` is ``"general"``, ``"single-premise"`` (one
    premise each, no names) or ``"unique-premise"`` (additionally pairwise
    distinct premises).
    """
    min_args: int = 2
    max_args: int = 8
    sentences: int = 10
    premise_weights: tuple = (0.55, 0.35, 0.10)
    density: float = 0.15
    naming: float = 0.25
    minimal: float = 0.15
    seed: int = 0
    saturation: str = None
    shape: str = "general"

    def validate(self):
        if self.sentences < 1:
            raise ConfigError("need at least one sentence")
        if not 0 <= self.min_args <= self.max_args:
            raise ConfigError("argument-count range is empty")
        for x, what in ((self.density, "density"), (self.naming, "naming"), (self.minimal, "minimal")):
            if not 0.0 <= x <= 1.0:
                raise ConfigError(f"{what} must lie in [0, 1]")
        if not self.premise_weights or min(self.premise_weights) < 0 or sum(self.premise_weights) <= 0:
            raise ConfigError("premise weights must be non-negative and not all zero")
        if self.saturation not in (None, "weak", "strong"):
            raise ConfigError(f"unknown saturation {self.saturation!r}")
        if self.shape not in ("general", "single-premise", "unique-premise"):
            raise ConfigError(f"unknown shape {self.shape!r}")
        if self.shape == "unique-premise" and self.max_args > self.sentences:
            raise ConfigError("unique premises need at least as many sentences as arguments")
        return self


def gen_sbaf(config: GenConfig = GenConfig()) -> SBAF:
    config.validate()
    rng = random.Random(config.seed)
    pool = [f"s{i}" for i in range(config.sentences)]
    pairs = [(s, t) for s, t in itertools.combinations(pool, 2) if rng.random() < config.density]
    k = rng.randint(config.min_args, config.max_args)
    args, names, name_inc = [], {}, []
    fresh = iter(pool) if config.shape == "unique-premise" else None
    if fresh is not None:
        fresh = iter(rng.sample(pool, len(pool)))
    for i in range(1, k + 1):
        aid = f"a{i}"
        if config.shape == "general":
            if rng.random() < config.minimal:
                s = rng.choice(pool)
                args.append(Argument(aid, frozenset([s]), s))
                continue
            size = rng.choices(range(1, len(config.premise_weights) + 1), config.premise_weights)[0]
            premises = frozenset(rng.sample(pool, min(size, len(pool))))
        elif config.shape == "single-premise":
            premises = frozenset([rng.choice(pool)])
        else:
            premises = frozenset([next(fresh)])
        args.append(Argument(aid, premises, rng.choice(pool)))
        if config.shape == "general" and rng.random() < config.naming and not args[-1].is_minimal:
            name = f"n_{aid}"
            names[aid] = name
            for t in rng.sample(pool, rng.randint(1, 2)):
                name_inc.append((name, t))
    sentences = set(pool) | set(names.values())
    lang = Language(sentences, pairs + name_inc, names)
    sb = SBAF(lang, args)
    if config.saturation is None:
        return sb
    return _shape_saturated(sb, config, rng)


def weakly_saturate(sb: SBAF, rng: random.Random) -> SBAF:
    """Add minimal arguments for one random side of each uncovered pair."""
    have = set(minimal_sentences(sb))
    pairs, undercut = saturation_requirements(sb)
    add = [u for u in sorted(undercut) if u not in have]
    have.update(add)
    for s, t in pairs:
        if s in have or t in have:
            continue
        pick = s if s == t else rng.choice((s, t))
        add.append(pick)
        have.add(pick)
    return add_minimal_arguments(sb, add)


def _keep(sb, arguments):
    """``sb`` cut down to ``arguments``, dropping names of removed ones."""
    ids = {a.id for a in arguments}
    names = {k: v for k, v in sb.language.names.items() if k in ids}
    lang = sb.language if names == sb.language.names else sb.language.with_names(names)
    return SBAF(lang, arguments)


def _shape_saturated(sb, config, rng):
    base = list(sb.arguments)
    while True:
        cur = _keep(sb, base)
        sat = strongly_saturate(cur) if config.saturation == "strong" else weakly_saturate(cur, rng)
        if len(sat) <= config.max_args or not base:
            return sat
        base.pop(rng.randrange(len(base)))


def gen_baf(config: GenConfig = GenConfig(), attack_density=0.2, support_density=0.15) -> BAF:
    config.validate()
    rng = random.Random(config.seed)
    ids = tuple(f"a{i}" for i in range(1, rng.randint(config.min_args, config.max_args) + 1))
    att = {(a, b) for a in ids for b in ids if rng.random() < attack_density}
    sup = {(a, b) for a in ids for b in ids if a != b and rng.random() < support_density}
    return BAF(ids, att, sup)


def well_formed(sb: SBAF):
    """Problems with ``sb`` as a list of strings (empty when well formed)."""
    problems = []
    lang = sb.language
    for s in lang.sentences:
        for t in lang.incompatible(s):
            if s not in lang.incompatible(t):
                problems.append(f"incompatibility {s}/{t} is not symmetric")
    for a in sb.arguments:
        if not a.premises:
            problems.append(f"{a.id} has no premises")
        if a.is_minimal and lang.undercutters(a.id):
            problems.append(f"minimal argument {a.id} can be undercut")
        if not a.sentences <= lang.sentences:
            problems.append(f"{a.id} uses undeclared sentences")
    rebuilt = SBAF(lang, sb.arguments)
    if rebuilt.attack != sb.attack:
        problems.append("stored attack relation differs from the derived one")
    return problems


# -- proposition suite -------------------------------------------------------


@dataclass
class PropositionReport:
    id: str
    title: str
    trials: int = 0
    checked: int = 0
    skipped: int = 0
    violations: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self):
        return not self.violations

    def to_dict(self):
        d = asdict(self)
        d["ok"] = self.ok
        d["seconds"] = round(self.seconds, 3)
        return d


class _Families:
    """Lazily computed extension families of one framework, as masks."""

    def __init__(self, sb, max_args, max_sents):
        self.sb, self.max_args, self.max_sents = sb, max_args, max_sents
        self._cache = {}

    def get(self, key):
        if key not in self._cache:
            self._cache[key] = self._compute(key)
        return self._cache[key]

    def _compute(self, key):
        sb = self.sb
        if key in ("SC", "WC"):
            return coherence.coherent_masks("strong" if key == "SC" else "weak", sb, self.max_args)
        if key in ("SAL", "WAL"):
            return language.adequate_masks("strong" if key == "SAL" else "weak", sb, self.max_sents)
        if key in ("CSC", "CWC"):
            kind = "strong" if key == "CSC" else "weak"
            return language.confident_coherent_masks(kind, sb, self.max_sents, self.max_args)
        if key in ("CSAL", "CWAL"):
            kind = "strong" if key == "CSAL" else "weak"
            return language.confident_adequate_masks(kind, sb, self.max_sents)
        if key == "COMPATIBLE":
            t = sb.tables
            return [S for S in range(1 << t.m) if language.compatible_mask(S, sb)]
        return af.enumerate_masks_tagged(key, sb, self.max_args)

    def sent_mask(self, E):
        t = self.sb.tables
        out = 0
        for i in range(t.n):
            if E >> i & 1:
                out |= t.sent[i]
        return out


def _fmt(sb, E):
    return "{" + ", ".join(sb.ordered(sb.unmask(E))) + "}"


def _fmt_s(sb, S):
    return "{" + ", ".join(sorted(sb.unmask_sentences(S))) + "}"


def _obs1(sb, fam, rng):
    wc = set(fam.get("WC"))
    sc = fam.get("SC")
    return len(sc), [f"strongly coherent {_fmt(sb, E)} is not weakly coherent" for E in sc if E not in wc]


def _obs2(sb, fam, rng):
    wc = set(fam.get("WC"))
    comp = fam.get("complete")
    out = [f"complete {_fmt(sb, E)} is not weakly coherent" for E in comp if E not in wc]
    top = set(af.maximal(sorted(wc), len(sb)))
    pref = set(fam.get("preferred"))
    out += [f"maximal weakly coherent {_fmt(sb, E)} is not preferred" for E in sorted(top - pref)]
    out += [f"preferred {_fmt(sb, E)} is not maximal weakly coherent" for E in sorted(pref - top)]
    return len(comp) + len(wc), out


def _prop3(sb, fam, rng, samples=4):
    compatible = fam.get("COMPATIBLE")
    picks = sorted(rng.sample(compatible, min(samples, len(compatible))))
    out = []
    for S in picks:
        sents = sb.unmask_sentences(S)
        try:
            expected = oracle_arg_w(sents, sb, max_args=None)
        except AssertionError as exc:
            out.append(f"S={_fmt_s(sb, S)}: {exc}")
            continue
        got = sb.unmask(language.arg_w_mask(S, sb))
        if got != expected:
            out.append(f"S={_fmt_s(sb, S)}: iterative {sorted(got)} != least fixpoint {sorted(expected)}")
        if sb.unmask(language.init_mask(S, sb)) != oracle_init(sents, sb):
            out.append(f"S={_fmt_s(sb, S)}: Init differs from brute-force maximal admissible subset")
    return len(picks), out


def _prop4(sb, fam, rng):
    out = []
    compatible = fam.get("COMPATIBLE")
    for S in compatible:
        its = language.arg_w_iterates(S, sb)
        for prev, nxt in zip(its, its[1:]):
            if prev & ~nxt:
                out.append(f"S={_fmt_s(sb, S)}: iterates shrink")
        for E in its:
            if not af.check_mask(sb, kernels.ADMISSIBLE, E):
                out.append(f"S={_fmt_s(sb, S)}: iterate {_fmt(sb, E)} is not admissible")
    return len(compatible), out


def _prop5(sb, fam, rng):
    wal = set(fam.get("WAL"))
    sal = fam.get("SAL")
    return len(sal), [f"strongly adequate {_fmt_s(sb, S)} is not weakly adequate" for S in sal if S not in wal]


def _correspondence(kind):
    coh, adq = ("SC", "SAL") if kind == "strong" else ("WC", "WAL")

    def check(sb, fam, rng):
        coherent, adequate = set(fam.get(coh)), set(fam.get(adq))
        out = []
        for S in sorted(adequate):
            E = language.induced_mask(kind, S, sb)
            if E not in coherent:
                out.append(f"{kind}ly adequate {_fmt_s(sb, S)} induces {_fmt(sb, E)}, not {kind}ly coherent")
        for E in sorted(coherent):
            S = fam.sent_mask(E)
            if S not in adequate:
                out.append(f"{kind}ly coherent {_fmt(sb, E)} has sentences {_fmt_s(sb, S)}, not {kind}ly adequate")
        return len(coherent) + len(adequate), out
    return check


def _prop9(sb, fam, rng):
    out, n = [], 0
    for kind, conf, coh in (("strong", "CSAL", "SC"), ("weak", "CWAL", "WC")):
        coherent = set(fam.get(coh))
        for S in fam.get(conf):
            n += 1
            E = language.induced_mask(kind, S, sb)
            if E not in coherent:
                out.append(f"confident {kind}ly adequate {_fmt_s(sb, S)} induces non-coherent {_fmt(sb, E)}")
    return n, out


def _prop10(sb, fam, rng):
    cwc = set(fam.get("CWC"))
    pref = fam.get("preferred")
    return len(pref), [f"preferred {_fmt(sb, E)} is not confident weakly coherent" for E in pref if E not in cwc]


def _prop11(sb, fam, rng):
    pref = set(fam.get("preferred"))
    cwc = fam.get("CWC")
    return len(cwc), [f"confident weakly coherent {_fmt(sb, E)} is not preferred" for E in cwc if E not in pref]


def prop12_hypotheses(sb: SBAF):
    """``(single_premise_undercut_free, premises_pairwise_distinct)``."""
    universe = set(sb.universe)
    single = all(len(a.premises) == 1 for a in sb.arguments)
    no_undercut = not any(sb.language.undercutters(a.id) & universe for a in sb.arguments)
    distinct = len({a.premises for a in sb.arguments}) == len(sb)
    return single and no_undercut, single and no_undercut and distinct


def _prop12(sb, fam, rng):
    forward, converse = prop12_hypotheses(sb)
    out = []
    sc = [sb.unmask(E) for E in fam.get("SC")]
    baf = baf_from_sbaf(sb, "conclusion")
    dadm = enumerate_d("d-admissible", baf, fam.max_args)
    if forward:
        dset = set(dadm)
        out += [f"strongly coherent {sorted(E)} is not d-admissible" for E in sc if E not in dset]
    if converse:
        sset = set(sc)
        out += [f"d-admissible {sorted(E)} is not strongly coherent" for E in dadm if E not in sset]
        if baf_from_sbaf(sb, "singleton").support != baf.support:
            out.append("conclusion and singleton support rules disagree under unique single premises")
    return len(sc) + len(dadm), out


@dataclass(frozen=True)
class Proposition:
    id: str
    title: str
    check: object
    shape: dict
    hypothesis: object = None


def _always(sb):
    return True


PROPOSITIONS = {p.id: p for p in [
    Proposition("obs1", "strongly coherent extensions are weakly coherent", _obs1, {}),
    Proposition("obs2", "complete => weakly coherent; maximal weakly coherent = preferred", _obs2, {}),
    Proposition("prop3", "weak argument set well defined: iteration = brute-force least fixpoint", _prop3, {}),
    Proposition("prop4", "weak argument sets and all iterates are admissible and increasing", _prop4, {}),
    Proposition("prop5", "strongly adequate => weakly adequate", _prop5, {}),
    Proposition("prop6", "strong adequacy <-> strong coherence on saturated frameworks",
                _correspondence("strong"), {"saturation": "strong"}, is_saturated),
    Proposition("prop7", "weak adequacy <-> weak coherence on saturated frameworks",
                _correspondence("weak"), {"saturation": "strong"}, is_saturated),
    Proposition("prop9", "confident adequate sets induce confident coherent extensions (saturated)",
                _prop9, {"saturation": "weak"}, is_saturated),
    Proposition("prop10", "preferred => confident weakly coherent (saturated)",
                _prop10, {"saturation": "weak"}, is_saturated),
    Proposition("prop11", "confident weakly coherent => preferred (strongly saturated)",
                _prop11, {"saturation": "strong"}, is_strongly_saturated),
    Proposition("prop12", "strong coherence vs d-admissibility on unique single-premise frameworks",
                _prop12, {"shape": ("single-premise", "unique-premise")},
                lambda sb: prop12_hypotheses(sb)[0]),
]}

ACCEPTANCE_IDS = ("obs1", "obs2", "prop3", "prop4", "prop5", "prop6", "prop7", "prop10", "prop11", "prop12")


def _violation_set(prop, sb, max_args, max_sents, seed):
    if prop.hypothesis is not None and not prop.hypothesis(sb):
        return None
    try:
        fam = _Families(sb, max_args, max_sents)
        return prop.check(sb, fam, random.Random(seed))
    except CapExceededError:
        return None


def shrink(prop, sb, max_args, max_sents, seed):
    """Greedily drop arguments, incompatibilities and names while still violating."""

    def violates(cand):
        res = _violation_set(prop, cand, max_args, max_sents, seed)
        return res is not None and bool(res[1])

    changed = True
    while changed:
        changed = False
        for a in reversed(sb.arguments):
            cand = _keep(sb, [b for b in sb.arguments if b.id != a.id])
            if violates(cand):
                sb, changed = cand, True
                break
        if changed:
            continue
        lang = sb.language
        for s, t in lang.incompatible_pairs():
            inc = [(x, y) for x, y in lang.incompatible_pairs() if (x, y) != (s, t)]
            cand = SBAF(Language(lang.sentences, inc, lang.names), sb.arguments)
            if violates(cand):
                sb, changed = cand, True
                break
        if changed:
            continue
        for aid in sorted(lang.names):
            names = {k: v for k, v in lang.names.items() if k != aid}
            cand = SBAF(lang.with_names(names), sb.arguments)
            if violates(cand):
                sb, changed = cand, True
                break
    return sb


def _trial(job):
    pid, config, max_args, max_sents = job
    prop = PROPOSITIONS[pid]
    shapes = prop.shape.get("shape")
    frameworks = []
    if shapes:
        for k, shape in enumerate(shapes):
            frameworks.append(gen_sbaf(replace(config, shape=shape, seed=config.seed * 7 + k,
                                               min_args=min(config.min_args, 1))))
    else:
        frameworks.append(gen_sbaf(replace(config, **prop.shape)))
    out = []
    for sb in frameworks:
        res = _violation_set(prop, sb, max_args, max_sents, config.seed)
        if res is None:
            out.append((None, []))
            continue
        checked, violations = res
        witness = None
        if violations:
            small = shrink(prop, sb, max_args, max_sents, config.seed)
            witness = emit(small)
        out.append((checked, [{"seed": config.seed, "detail": v, "witness": witness} for v in violations]))
    return out


def run_suite(ids=ACCEPTANCE_IDS, config: GenConfig = GenConfig(), trials=100, workers=1,
              max_args=af.DEFAULT_MAX_ARGS, max_sents=language.DEFAULT_MAX_SENTS) -> list:
    """Run each proposition on ``trials`` seeded frameworks.

    Trial ``i`` uses seed ``config.seed + i``; frameworks are shaped so the
    proposition's hypotheses hold.  Reports come back in the order of
    ``ids`` and are identical whatever ``workers`` is.
    """
    reports = []
    for pid in ids:
        if pid == "prop2":
            reports.append(directionality_report_on_fixtures(max_args))
            continue
        if pid not in PROPOSITIONS:
            raise ConfigError(f"unknown proposition {pid!r}; known: prop2, {', '.join(PROPOSITIONS)}")
        prop = PROPOSITIONS[pid]
        start = time.perf_counter()
        jobs = [(pid, replace(config, seed=config.seed + i), max_args, max_sents) for i in range(trials)]
        if workers > 1:
            with ProcessPoolExecutor(workers) as pool:
                results = list(pool.map(_trial, jobs, chunksize=max(1, trials // (4 * workers))))
        else:
            results = [_trial(j) for j in jobs]
        rep = PropositionReport(pid, prop.title, trials=trials)
        for per_trial in results:
            for checked, violations in per_trial:
                if checked is None:
                    rep.skipped += 1
                else:
                    rep.checked += checked
                rep.violations.extend(violations)
        rep.seconds = time.perf_counter() - start
        reports.append(rep)
    return reports


def directionality_report_on_fixtures(max_args=af.DEFAULT_MAX_ARGS, names=fixtures.SBAF_FIXTURES):
    """Directionality over every unaffected U of the shipped fixtures.

    A violation is recorded when weak coherence is not directional for some
    U, or when no fixture witnesses the failure of strong coherence.
    """
    start = time.perf_counter()
    rep = PropositionReport("prop2", "weak coherence is directional, strong coherence is not")
    strong_witness = None
    for name in names:
        sb = fixtures.load(name)
        rep.trials += 1
        for U in subsets(sb.ids):
            if af.outside_influence(sb, U):
                continue
            rep.checked += 1
            if not coherence.check_directionality(sb, U, "weakly-coherent", max_args):
                rep.violations.append({"seed": name, "detail": f"weak coherence not directional for U={sorted(U)}",
                                       "witness": emit(sb)})
            if strong_witness is None and not coherence.check_directionality(sb, U, "strongly-coherent", max_args):
                strong_witness = (name, sorted(U))
    if strong_witness is None:
        rep.violations.append({"seed": None, "detail": "no fixture shows strong coherence failing directionality",
                               "witness": None})
    rep.seconds = time.perf_counter() - start
    return rep
