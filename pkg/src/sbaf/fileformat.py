"""Line-based framework files.

One directive per line, ``#`` starts a comment::

    sent s t u            # optional declarations
    inc t r               # t and r are incompatible (both directions)
    arg a5 : v x -> r     # premises before ->, conclusion after
    name a6 n6            # a6's inference is named by sentence n6

Sentences mentioned by ``arg``, ``inc`` or ``name`` are declared
automatically.  An undercut on ``a6`` is written as an incompatibility with
its name sentence (``inc r n6``).
"""

import hashlib
import re

from .errors import ParseError, SBAFError
from .model import SBAF, Argument, Language

TOKEN = re.compile(r"->|:|[A-Za-z0-9_]+|\S+")
IDENT = re.compile(r"[A-Za-z0-9_]+\Z")


def _tokens(line):
    return [(m.group(), m.start() + 1) for m in TOKEN.finditer(line)]


def parse(path) -> SBAF:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_text(text, path=str(path))


def parse_text(text, path=None) -> SBAF:
    sentences = []
    seen = set()
    inc = []
    args = []
    arg_lines = {}
    names = {}

    def declare(tok, lineno, col):
        if not IDENT.match(tok):
            raise ParseError(f"invalid identifier {tok!r}", lineno, col, path)
        if tok not in seen:
            seen.add(tok)
            sentences.append(tok)

    def fail(msg, lineno, col):
        raise ParseError(msg, lineno, col, path)

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        head, hcol = toks[0]
        rest = toks[1:]
        if head == "sent":
            if not rest:
                fail("'sent' needs at least one sentence id", lineno, hcol)
            for tok, col in rest:
                declare(tok, lineno, col)
        elif head == "inc":
            if len(rest) != 2:
                fail("'inc' takes exactly two sentence ids", lineno, hcol)
            for tok, col in rest:
                declare(tok, lineno, col)
            inc.append((rest[0][0], rest[1][0]))
        elif head == "arg":
            if len(rest) < 2 or rest[1][0] != ":":
                fail("expected 'arg <id> : <premises> -> <conclusion>'", lineno, hcol)
            aid, acol = rest[0]
            if not IDENT.match(aid):
                fail(f"invalid argument id {aid!r}", lineno, acol)
            body = rest[2:]
            arrows = [i for i, (tok, _) in enumerate(body) if tok == "->"]
            if len(arrows) != 1:
                col = body[arrows[1]][1] if len(arrows) > 1 else (body[-1][1] if body else rest[1][1])
                fail("expected exactly one '->' in argument", lineno, col)
            k = arrows[0]
            premises, after = body[:k], body[k + 1:]
            if not premises:
                fail(f"argument {aid!r} has an empty premise list", lineno, body[k][1])
            if len(after) != 1:
                col = after[1][1] if len(after) > 1 else body[k][1]
                fail("expected exactly one conclusion after '->'", lineno, col)
            for tok, col in premises + after:
                declare(tok, lineno, col)
            if aid in arg_lines:
                fail(f"duplicate argument id {aid!r} (first defined on line {arg_lines[aid]})", lineno, acol)
            arg_lines[aid] = lineno
            args.append(Argument(aid, frozenset(t for t, _ in premises), after[0][0]))
        elif head == "name":
            if len(rest) != 2:
                fail("'name' takes an argument id and a sentence id", lineno, hcol)
            (aid, acol), (sid, scol) = rest
            if aid in names:
                fail(f"argument {aid!r} already has a name", lineno, acol)
            declare(sid, lineno, scol)
            names[aid] = (sid, lineno, acol)
        else:
            fail(f"unknown directive {head!r}", lineno, hcol)

    if not sentences:
        raise ParseError("empty framework: a language needs at least one sentence", path=path)
    for aid, (sid, lineno, col) in names.items():
        if aid not in arg_lines:
            fail(f"name assigned to unknown argument {aid!r}", lineno, col)
    try:
        language = Language(sentences, inc, {aid: v[0] for aid, v in names.items()})
        return SBAF(language, args)
    except SBAFError as exc:
        raise ParseError(str(exc), path=path) from exc


def emit(sb: SBAF) -> str:
    """Canonical text for ``sb``; ``parse_text(emit(sb)) == sb``."""
    lines = ["sent " + " ".join(sorted(sb.language.sentences))]
    lines += [f"inc {s} {t}" for s, t in sb.language.incompatible_pairs()]
    for a in sb.arguments:
        lines.append(f"arg {a.id} : {' '.join(sorted(a.premises))} -> {a.conclusion}")
    for a in sb.arguments:
        name = sb.language.name_of(a.id)
        if name is not None:
            lines.append(f"name {a.id} {name}")
    return "\n".join(lines) + "\n"


def digest(sb: SBAF) -> str:
    return "sha256:" + hashlib.sha256(emit(sb).encode()).hexdigest()
