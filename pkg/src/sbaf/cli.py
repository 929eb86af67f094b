"""Command line: ``sbaf solve|check|saturate|dot|props|suite``.

Exit codes: 0 success, 1 input error, 2 enumeration cap exceeded, 3 I/O error.
"""

import argparse
import json
import sys

from . import __version__, af, bipolar, coherence, language, verify
from .errors import CapExceededError, SBAFError
from .fileformat import digest, emit, parse
from .model import (is_saturated, is_strongly_saturated, minimal_sentences,
                    strong_saturation_sentences, strongly_saturate)

ARGUMENT_TAGS = af.TAGS + coherence.TAGS + bipolar.TAGS
LANGUAGE_TAGS = ("strongly-adequate", "weakly-adequate")
SEMANTICS = ARGUMENT_TAGS + LANGUAGE_TAGS
KIND_OF = {"strongly-coherent": "strong", "weakly-coherent": "weak",
           "strongly-adequate": "strong", "weakly-adequate": "weak"}


class InputError(SBAFError):
    pass


class _Parser(argparse.ArgumentParser):
    # usage mistakes are input errors, not the cap exit code argparse would use
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(1)


def _dump(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _write(text, out):
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _framework(sb):
    return {"digest": digest(sb), "arguments": len(sb), "sentences": len(sb.universe)}


def _canonical(extensions):
    return sorted(sorted(e) for e in extensions)


def _split_ids(text):
    return [t for t in (x.strip() for x in text.split(",")) if t]


def solve(sb, semantics, mode=None, confident=False, max_args=af.DEFAULT_MAX_ARGS,
          max_sents=language.DEFAULT_MAX_SENTS, support_rule="conclusion"):
    """Compute a ResultDocument (a dict) for one framework."""
    kind = KIND_OF.get(semantics)
    if mode is None:
        mode = "language" if semantics in LANGUAGE_TAGS else "arguments"
    if mode not in ("arguments", "language"):
        raise InputError(f"unknown mode {mode!r}; expected 'arguments' or 'language'")
    if kind is None and mode == "language":
        raise InputError(f"semantics {semantics!r} has no language side; use --mode arguments")
    if confident and kind is None:
        raise InputError("--confident applies only to coherent and adequate semantics")
    diagnostics = {"saturated": is_saturated(sb), "strongly_saturated": is_strongly_saturated(sb),
                   "max_args": max_args, "max_sents": max_sents}
    if semantics in af.TAGS:
        exts = af.enumerate(semantics, sb, max_args)
    elif semantics in bipolar.TAGS:
        diagnostics["support_rule"] = support_rule
        exts = bipolar.enumerate_d(semantics, bipolar.baf_from_sbaf(sb, support_rule), max_args)
    elif mode == "language":
        if confident:
            exts = language.confident_adequate(kind, sb, max_sents)
        else:
            exts = language.enumerate_adequate(kind, sb, max_sents)
    elif confident:
        exts = language.confident_coherent(kind, sb, max_sents, max_args)
    elif semantics in coherence.TAGS:
        exts = coherence.enumerate_coherent(kind, sb, max_args)
    else:
        # argument sets induced by the adequate language extensions
        af.check_cap(len(sb), max_args)
        masks = {language.induced_mask(kind, S, sb) for S in language.adequate_masks(kind, sb, max_sents)}
        exts = [sb.unmask(m) for m in masks]
    extensions = _canonical(exts)
    return {
        "command": "solve",
        "framework": _framework(sb),
        "semantics": semantics,
        "mode": mode,
        "confident": confident,
        "extensions": extensions,
        "count": len(extensions),
        "diagnostics": diagnostics,
    }


def check(sb, extension, semantics, support_rule="conclusion", max_args=af.DEFAULT_MAX_ARGS):
    """Verdict and first violated clause for one candidate extension."""
    if semantics in LANGUAGE_TAGS:
        msg = language.adequacy_violation(KIND_OF[semantics], extension, sb)
    elif semantics in coherence.TAGS:
        msg = coherence.violation(KIND_OF[semantics], extension, sb)
    elif semantics in bipolar.TAGS:
        msg = bipolar.d_violation(semantics, extension, bipolar.baf_from_sbaf(sb, support_rule), max_args)
    else:
        msg = af.violation(semantics, extension, sb, max_args)
    return {
        "command": "check",
        "framework": _framework(sb),
        "semantics": semantics,
        "extension": sorted(extension),
        "verdict": msg is None,
        "explanation": msg,
    }


def props(sb):
    universe = set(sb.universe)
    return {
        "command": "props",
        "framework": _framework(sb),
        "language_sentences": len(sb.language.sentences),
        "attacks": len(sb.attack),
        "named_arguments": sorted(sb.language.names),
        "minimal_sentences": sorted(minimal_sentences(sb)),
        "incompatible_pairs": sum(1 for s, t in sb.language.incompatible_pairs() if s in universe and t in universe),
        "saturated": is_saturated(sb),
        "strongly_saturated": is_strongly_saturated(sb),
        "missing_minimal_for_strong": sorted(strong_saturation_sentences(sb)),
    }


def dot(sb, support_rule="conclusion"):
    """Graphviz text: solid edges are attacks, dashed edges binary supports."""
    baf = bipolar.baf_from_sbaf(sb, support_rule)
    order = lambda rel: sorted(rel, key=lambda p: (sb.index[p[0]], sb.index[p[1]]))  # noqa: E731
    lines = ["digraph sbaf {", "  node [shape=box];"]
    for a in sb.arguments:
        prem = ", ".join(sorted(a.premises))
        lines.append(f'  "{a.id}" [label="{a.id}: {{{prem}}} -> {a.conclusion}"];')
    for x, y in order(sb.attack):
        lines.append(f'  "{x}" -> "{y}" [style=solid];')
    for x, y in order(baf.support):
        lines.append(f'  "{x}" -> "{y}" [style=dashed];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _plain(doc):
    return "".join(",".join(e) + "\n" for e in doc["extensions"])


def _cmd_solve(ns):
    doc = solve(parse(ns.file), ns.semantics, ns.mode, ns.confident, ns.max_args, ns.max_sents, ns.support_rule)
    _write(_plain(doc) if ns.plain else _dump(doc), ns.output)


def _cmd_check(ns):
    doc = check(parse(ns.file), _split_ids(ns.extension), ns.semantics, ns.support_rule, ns.max_args)
    if ns.plain:
        text = "true\n" if doc["verdict"] else f"false: {doc['explanation']}\n"
    else:
        text = _dump(doc)
    _write(text, ns.output)


def _cmd_saturate(ns):
    # weak saturation has many minimal completions, so only the strong one is built
    _write(emit(strongly_saturate(parse(ns.file))), ns.output)


def _cmd_dot(ns):
    _write(dot(parse(ns.file), ns.support_rule), ns.output)


def _cmd_props(ns):
    doc = props(parse(ns.file))
    if ns.plain:
        text = "".join(f"{k}={doc[k]}\n" for k in ("saturated", "strongly_saturated"))
        text = f"arguments={doc['framework']['arguments']}\nsentences={doc['framework']['sentences']}\n" + text
    else:
        text = _dump(doc)
    _write(text, ns.output)


def _cmd_suite(ns):
    ids = _split_ids(ns.props) if ns.props else list(verify.ACCEPTANCE_IDS)
    config = verify.GenConfig(seed=ns.seed, max_args=ns.gen_max_args, sentences=ns.gen_sentences)
    reports = verify.run_suite(ids, config, trials=ns.trials, workers=ns.workers)
    doc = {
        "command": "suite",
        "config": {"seed": ns.seed, "trials": ns.trials, "max_args": ns.gen_max_args,
                   "sentences": ns.gen_sentences},
        "reports": [r.to_dict() for r in reports],
        "violations": sum(len(r.violations) for r in reports),
    }
    if not ns.timings:
        for r in doc["reports"]:
            r.pop("seconds")
    _write(_dump(doc), ns.output)


def build_parser():
    p = _Parser(prog="sbaf", description="Solve and check structured bipolar argumentation frameworks.")
    p.add_argument("--version", action="version", version=f"sbaf {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, output=True):
        sp.add_argument("file", help="framework file")
        if output:
            sp.add_argument("-o", "--output", help="write here instead of stdout")

    sp = sub.add_parser("solve", help="enumerate extensions")
    common(sp)
    sp.add_argument("--semantics", required=True, choices=SEMANTICS)
    sp.add_argument("--mode", choices=("arguments", "language"),
                    help="argument or sentence side (default depends on --semantics)")
    sp.add_argument("--confident", action="store_true", help="only confident extensions")
    sp.add_argument("--max-args", type=int, default=af.DEFAULT_MAX_ARGS)
    sp.add_argument("--max-sents", type=int, default=language.DEFAULT_MAX_SENTS)
    sp.add_argument("--support-rule", choices=bipolar.SUPPORT_RULES, default="conclusion")
    sp.add_argument("--plain", action="store_true", help="one extension per line, comma-joined")
    sp.set_defaults(func=_cmd_solve)

    sp = sub.add_parser("check", help="check one extension and explain a failure")
    common(sp)
    sp.add_argument("--extension", required=True, help="comma-separated ids (may be empty)")
    sp.add_argument("--semantics", required=True, choices=SEMANTICS)
    sp.add_argument("--support-rule", choices=bipolar.SUPPORT_RULES, default="conclusion")
    sp.add_argument("--max-args", type=int, default=af.DEFAULT_MAX_ARGS)
    sp.add_argument("--plain", action="store_true")
    sp.set_defaults(func=_cmd_check)

    sp = sub.add_parser("saturate", help="add minimal arguments until strongly saturated")
    common(sp)
    sp.add_argument("--strong", action="store_true", default=True,
                    help="strong saturation (the only constructive variant; kept for clarity)")
    sp.set_defaults(func=_cmd_saturate)

    sp = sub.add_parser("dot", help="Graphviz rendering")
    common(sp)
    sp.add_argument("--support-rule", choices=bipolar.SUPPORT_RULES, default="conclusion")
    sp.set_defaults(func=_cmd_dot)

    sp = sub.add_parser("props", help="sizes and saturation flags")
    common(sp)
    sp.add_argument("--plain", action="store_true")
    sp.set_defaults(func=_cmd_props)

    sp = sub.add_parser("suite", help="run the randomized proposition checks")
    sp.add_argument("--props", help="comma-separated ids (default: the acceptance set)")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--gen-max-args", type=int, default=8)
    sp.add_argument("--gen-sentences", type=int, default=10)
    sp.add_argument("--timings", action="store_true", help="include wall-clock seconds (not reproducible)")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=_cmd_suite)
    return p


def main(argv=None):
    try:
        ns = build_parser().parse_args(argv)
    except SystemExit as exc:   # usage errors, --help and --version
        return exc.code
    try:
        ns.func(ns)
    except CapExceededError as exc:
        print(f"sbaf: {exc}", file=sys.stderr)
        return 2
    except SBAFError as exc:
        print(f"sbaf: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"sbaf: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
