"""Textual description language for spaces, maps and random variables.

::

    # comments run to end of line
    space Y { outcomes y0 y1 y2 ; atoms { y0 } { y1 y2 } ; prob 0=1/2 1=0.5 }
    space X { outcomes x0 x1 ; prob 0=1/2 1=1/2 }
    map f : Y -> X { y0 -> x0  y1 -> x1  y2 -> x1 }
    rv v on Y { y0 = 1  y1 = 3  y2 = 3 }

``atoms`` is optional (default: singletons).  ``prob`` keys are 0-based atom
indices in declaration order; missing atoms get mass 0.  A ``map`` gives the
underlying function ``Y -> X``; the arrow it names runs ``X -> Y``.
Rationals are written ``a/b``, ``a`` or as decimals, and are read exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .category import ProbArrow
from .errors import ProbCatError
from .spaces import Partition, ProbabilitySpace, RandomVariable

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<arrow>->)|(?P<punct>[{};:=])|(?P<word>(?:(?!->)[^\s{};:=#])+)"
)
_RATIONAL = re.compile(r"-?\d+(?:/\d+)?|-?\d*\.\d+")
_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


class DescriptionError(Exception):
    kind = "error"

    def __init__(self, message, line=None, col=None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def format(self, source="<input>"):
        where = f"{source}:{self.line}:{self.col}" if self.line is not None else source
        return f"{where}: {self.kind}: {self.message}"


class DescriptionSyntaxError(DescriptionError):
    kind = "syntax error"


class UnknownNameError(DescriptionError):
    kind = "name error"


class SemanticError(DescriptionError):
    kind = "semantic error"


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise DescriptionSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind in ("arrow", "punct", "word"):
            tokens.append(Token(m.group() if kind != "word" else "word", m.group(), line, pos - line_start + 1))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


def parse_rational(text: str, line=None, col=None) -> Fraction:
    if not _RATIONAL.fullmatch(text):
        raise DescriptionSyntaxError(f"expected a rational, got {text!r}", line, col)
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise SemanticError(f"zero denominator in {text!r}", line, col) from None


@dataclass(frozen=True)
class SpaceDecl:
    name: str
    outcomes: tuple[str, ...]
    atoms: tuple[tuple[str, ...], ...] | None
    prob: tuple[tuple[int, Fraction], ...]
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class MapDecl:
    name: str
    source: str
    target: str
    pairs: tuple[tuple[str, str], ...]
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass(frozen=True)
class RvDecl:
    name: str
    space: str
    values: tuple[tuple[str, Fraction], ...]
    line: int = field(default=0, compare=False)
    col: int = field(default=0, compare=False)


@dataclass
class Document:
    """Parsed and resolved declarations.  Equality ignores source positions."""

    spaces: dict[str, SpaceDecl] = field(default_factory=dict)
    maps: dict[str, MapDecl] = field(default_factory=dict)
    rvs: dict[str, RvDecl] = field(default_factory=dict)
    _built: dict = field(default_factory=dict, compare=False, repr=False)

    def space(self, name: str) -> ProbabilitySpace:
        if name not in self.spaces:
            raise UnknownNameError(f"no space named {name!r}")
        key = ("space", name)
        if key not in self._built:
            self._built[key] = _build_space(self.spaces[name])
        return self._built[key]

    def arrow(self, name: str) -> ProbArrow:
        """The arrow ``target -> source`` named by map ``name``; library errors become SemanticError."""
        if name not in self.maps:
            raise UnknownNameError(f"no map named {name!r}")
        key = ("map", name)
        if key not in self._built:
            d = self.maps[name]
            y, x = self.space(d.source), self.space(d.target)
            table = dict(d.pairs)
            try:
                arrow = ProbArrow(x, y, [x.index[table[o]] for o in y.outcomes], name)
            except ProbCatError as exc:
                raise SemanticError(str(exc), d.line, d.col) from exc
            self._built[key] = arrow
        return self._built[key]

    def rv(self, name: str) -> RandomVariable:
        if name not in self.rvs:
            raise UnknownNameError(f"no random variable named {name!r}")
        key = ("rv", name)
        if key not in self._built:
            d = self.rvs[name]
            sp = self.space(d.space)
            table = dict(d.values)
            try:
                self._built[key] = RandomVariable(sp, [table[o] for o in sp.outcomes])
            except ProbCatError as exc:
                raise SemanticError(f"rv {name!r}: {exc}", d.line, d.col) from exc
        return self._built[key]


def _build_space(d: SpaceDecl) -> ProbabilitySpace:
    pos = {o: i for i, o in enumerate(d.outcomes)}
    try:
        if d.atoms is None:
            sigma = Partition.discrete(len(d.outcomes))
            decl_order = [(i,) for i in range(len(d.outcomes))]
        else:
            decl_order = [tuple(pos[o] for o in atom) for atom in d.atoms]
            sigma = Partition(len(d.outcomes), decl_order)
        mass = dict(d.prob)
        bad = [k for k in mass if not 0 <= k < len(decl_order)]
        if bad:
            raise SemanticError(f"space {d.name!r}: prob refers to missing atom index {bad[0]}", d.line, d.col)
        # prob keys follow declaration order; the partition sorts atoms canonically
        by_least = {min(atom): mass.get(k, Fraction(0)) for k, atom in enumerate(decl_order)}
        measure = tuple(by_least[a[0]] for a in sigma.atoms)
        return ProbabilitySpace(d.outcomes, sigma, measure, d.name)
    except ProbCatError as exc:
        raise SemanticError(str(exc), d.line, d.col) from exc


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def next(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str, what: str | None = None) -> Token:
        tok = self.next()
        if tok.kind != kind:
            shown = repr(tok.text) if tok.kind != "eof" else "end of input"
            raise DescriptionSyntaxError(f"expected {what or repr(kind)}, got {shown}", tok.line, tok.col)
        return tok

    def keyword(self, word: str) -> Token:
        tok = self.next()
        if tok.kind != "word" or tok.text != word:
            raise DescriptionSyntaxError(f"expected '{word}', got {tok.text!r}", tok.line, tok.col)
        return tok

    def name(self, what: str) -> Token:
        tok = self.expect("word", what)
        if not _NAME.fullmatch(tok.text):
            raise DescriptionSyntaxError(f"invalid {what} {tok.text!r}", tok.line, tok.col)
        return tok

    def words_until(self, stops: set[str]) -> list[Token]:
        out = []
        while self.peek().kind == "word":
            out.append(self.next())
        if self.peek().kind not in stops:
            tok = self.peek()
            raise DescriptionSyntaxError(
                f"expected outcome or one of {' '.join(sorted(stops))}, got {tok.text or 'end of input'!r}",
                tok.line,
                tok.col,
            )
        return out

    def document(self) -> Document:
        doc = Document()
        while self.peek().kind != "eof":
            tok = self.peek()
            if tok.kind == "word" and tok.text == "space":
                self.space_decl(doc)
            elif tok.kind == "word" and tok.text == "map":
                self.map_decl(doc)
            elif tok.kind == "word" and tok.text == "rv":
                self.rv_decl(doc)
            else:
                raise DescriptionSyntaxError(
                    f"expected 'space', 'map' or 'rv', got {tok.text!r}", tok.line, tok.col
                )
        return doc

    def space_decl(self, doc: Document):
        start = self.keyword("space")
        name = self.name("space name")
        if name.text in doc.spaces:
            raise SemanticError(f"space {name.text!r} declared twice", name.line, name.col)
        self.expect("{")
        self.keyword("outcomes")
        outs = self.words_until({";"})
        self.expect(";")
        if not outs:
            raise SemanticError(f"space {name.text!r} has no outcomes", name.line, name.col)
        seen = set()
        for o in outs:
            if o.text in seen:
                raise SemanticError(f"duplicate outcome {o.text!r}", o.line, o.col)
            seen.add(o.text)
        atoms = None
        if self.peek().kind == "word" and self.peek().text == "atoms":
            self.next()
            atoms = []
            while self.peek().kind == "{":
                self.next()
                members = self.words_until({"}"})
                self.expect("}")
                for o in members:
                    if o.text not in seen:
                        raise UnknownNameError(f"{o.text!r} is not an outcome of {name.text!r}", o.line, o.col)
                atoms.append(tuple(o.text for o in members))
            if not atoms:
                tok = self.peek()
                raise DescriptionSyntaxError("expected '{' starting an atom", tok.line, tok.col)
            self.expect(";")
        prob = []
        if self.peek().kind == "word" and self.peek().text == "prob":
            self.next()
            keys = set()
            while self.peek().kind == "word" and self.peek().text.isdigit():
                key = self.next()
                self.expect("=")
                val = self.expect("word", "a rational")
                k = int(key.text)
                if k in keys:
                    raise SemanticError(f"atom index {k} given twice", key.line, key.col)
                keys.add(k)
                prob.append((k, parse_rational(val.text, val.line, val.col)))
            if self.peek().kind == ";":
                self.next()
        self.expect("}", "'}' closing the space")
        decl = SpaceDecl(
            name.text,
            tuple(o.text for o in outs),
            None if atoms is None else tuple(atoms),
            tuple(sorted(prob)),
            start.line,
            start.col,
        )
        doc.spaces[name.text] = decl
        doc.space(name.text)

    def _resolve_space(self, doc: Document, tok: Token) -> ProbabilitySpace:
        if tok.text not in doc.spaces:
            raise UnknownNameError(f"undeclared space {tok.text!r}", tok.line, tok.col)
        return doc.space(tok.text)

    def map_decl(self, doc: Document):
        start = self.keyword("map")
        name = self.name("map name")
        if name.text in doc.maps:
            raise SemanticError(f"map {name.text!r} declared twice", name.line, name.col)
        self.expect(":")
        src = self.name("space name")
        self.expect("->")
        dst = self.name("space name")
        y = self._resolve_space(doc, src)
        x = self._resolve_space(doc, dst)
        self.expect("{")
        pairs = {}
        while self.peek().kind == "word":
            a = self.next()
            self.expect("->")
            b = self.expect("word", "an outcome")
            if a.text not in y.index:
                raise UnknownNameError(f"{a.text!r} is not an outcome of {src.text!r}", a.line, a.col)
            if b.text not in x.index:
                raise UnknownNameError(f"{b.text!r} is not an outcome of {dst.text!r}", b.line, b.col)
            if a.text in pairs:
                raise SemanticError(f"{a.text!r} mapped twice", a.line, a.col)
            pairs[a.text] = b.text
        self.expect("}")
        missing = [o for o in y.outcomes if o not in pairs]
        if missing:
            raise SemanticError(
                f"map {name.text!r} is undefined on {', '.join(missing)}", start.line, start.col
            )
        doc.maps[name.text] = MapDecl(
            name.text, src.text, dst.text,
            tuple((o, pairs[o]) for o in y.outcomes), start.line, start.col,
        )

    def rv_decl(self, doc: Document):
        start = self.keyword("rv")
        name = self.name("random variable name")
        if name.text in doc.rvs:
            raise SemanticError(f"rv {name.text!r} declared twice", name.line, name.col)
        self.keyword("on")
        sp_tok = self.name("space name")
        sp = self._resolve_space(doc, sp_tok)
        self.expect("{")
        vals = {}
        while self.peek().kind == "word":
            o = self.next()
            self.expect("=")
            val = self.expect("word", "a rational")
            if o.text not in sp.index:
                raise UnknownNameError(f"{o.text!r} is not an outcome of {sp_tok.text!r}", o.line, o.col)
            if o.text in vals:
                raise SemanticError(f"{o.text!r} given twice", o.line, o.col)
            vals[o.text] = parse_rational(val.text, val.line, val.col)
        self.expect("}")
        missing = [o for o in sp.outcomes if o not in vals]
        if missing:
            raise SemanticError(f"rv {name.text!r} is undefined on {', '.join(missing)}", start.line, start.col)
        doc.rvs[name.text] = RvDecl(
            name.text, sp_tok.text, tuple((o, vals[o]) for o in sp.outcomes), start.line, start.col
        )
        doc.rv(name.text)


def parse(text: str) -> Document:
    return _Parser(text).document()


def format_document(doc: Document) -> str:
    """Canonical text for ``doc``; ``parse(format_document(d)) == d``."""
    lines = []
    for d in doc.spaces.values():
        lines.append(f"space {d.name} {{")
        lines.append("  outcomes " + " ".join(d.outcomes) + " ;")
        if d.atoms is not None:
            lines.append("  atoms " + " ".join("{ " + " ".join(a) + " }" for a in d.atoms) + " ;")
        if d.prob:
            lines.append("  prob " + " ".join(f"{k}={v}" for k, v in d.prob))
        lines.append("}")
    for d in doc.maps.values():
        lines.append(f"map {d.name} : {d.source} -> {d.target} {{")
        lines.extend(f"  {a} -> {b}" for a, b in d.pairs)
        lines.append("}")
    for d in doc.rvs.values():
        lines.append(f"rv {d.name} on {d.space} {{")
        lines.extend(f"  {o} = {v}" for o, v in d.values)
        lines.append("}")
    return "\n".join(lines) + "\n"
