"""Reader and printer for the fibration description language.

    fibration ::= "genus" INT ";" "base" ("disk"|"sphere") ";" "word" "=" "[" [cycle ("," cycle)*] "]"
    cycle     ::= "a" INT | "s" INT | "conj(" cycle ";" braid ")"
    braid     ::= ("t" INT ["'"])+

Whitespace is insignificant and "#" starts a comment running to the end of the line.
"""
import re
from typing import List, NamedTuple, Optional

from .errors import DSLSyntaxError, IndexOutOfRange
from .models import Base, BraidWord, CycleKind, FibrationSpec, SymmetricCycle
from .utils.logging import logger

_TOKEN_RE = re.compile(
    r"(?P<ws>[ \t\r\n]+)|(?P<comment>#[^\n]*)|(?P<int>\d+)|(?P<name>[A-Za-z]+)|(?P<punct>[;=\[\],()'])"
)


class Token(NamedTuple):
    kind: str
    text: str
    line: int
    column: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if match is None:
            raise DSLSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = match.lastgroup
        chunk = match.group()
        if kind in ("int", "name", "punct"):
            tokens.append(Token(kind, chunk, line, pos - line_start + 1))
        for offset, ch in enumerate(chunk):
            if ch == "\n":
                line += 1
                line_start = pos + offset + 1
        pos = match.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = tokenize(text)
        self.pos = 0
        self.genus: Optional[int] = None

    @property
    def current(self) -> Token:
        return self.tokens[self.pos]

    def _fail(self, expected: str):
        tok = self.current
        found = tok.text if tok.kind != "eof" else "end of input"
        raise DSLSyntaxError(f"expected {expected}, found {found!r}", tok.line, tok.column)

    def advance(self) -> Token:
        tok = self.current
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        if self.current.text != text or self.current.kind == "int":
            self._fail(repr(text))
        return self.advance()

    def expect_int(self) -> Token:
        if self.current.kind != "int":
            self._fail("an integer")
        return self.advance()

    def parse(self) -> FibrationSpec:
        self.expect("genus")
        genus_tok = self.expect_int()
        genus = int(genus_tok.text)
        if genus < 1:
            raise IndexOutOfRange("genus must be at least 1", genus_tok.line, genus_tok.column)
        self.genus = genus
        self.expect(";")
        self.expect("base")
        if self.current.text not in ("disk", "sphere"):
            self._fail("'disk' or 'sphere'")
        base = Base(self.advance().text)
        self.expect(";")
        self.expect("word")
        self.expect("=")
        self.expect("[")
        word = []
        if self.current.text != "]":
            word.append(self.cycle())
            while self.current.text == ",":
                self.advance()
                word.append(self.cycle())
        self.expect("]")
        if self.current.kind != "eof":
            self._fail("end of input")
        return FibrationSpec(genus=genus, word=tuple(word), base=base)

    def cycle(self) -> SymmetricCycle:
        h = self.genus
        tok = self.current
        if tok.text == "conj":
            self.advance()
            self.expect("(")
            inner = self.cycle()
            self.expect(";")
            braid = self.braid()
            self.expect(")")
            return inner.conjugated(braid)
        if tok.text in ("a", "s"):
            self.advance()
            num_tok = self.expect_int()
            index = int(num_tok.text)
            if tok.text == "a":
                if not 1 <= index <= 2 * h + 1:
                    raise IndexOutOfRange(
                        f"arc index {index} outside 1..{2 * h + 1}", num_tok.line, num_tok.column
                    )
                return SymmetricCycle(
                    kind=CycleKind.ARC, index=index, conjugator=BraidWord.identity(2 * h + 2)
                )
            if not 1 <= index <= h - 1:
                raise IndexOutOfRange(
                    f"separating genus {index} outside 1..{h - 1}", num_tok.line, num_tok.column
                )
            canonical = min(index, h - index)
            if canonical != index:
                logger.warning(
                    f"Canonicalized separating genus {index} to {canonical} (genus {h}); "
                    f"the standard loop now encloses points 1..{2 * canonical + 1}"
                )
            return SymmetricCycle(
                kind=CycleKind.SEPARATING, index=canonical, conjugator=BraidWord.identity(2 * h + 2)
            )
        self._fail("a cycle ('a', 's' or 'conj')")

    def braid(self) -> BraidWord:
        strands = 2 * self.genus + 2
        letters = []
        if self.current.text != "t":
            self._fail("a braid letter 't'")
        while self.current.text == "t":
            self.advance()
            num_tok = self.expect_int()
            index = int(num_tok.text)
            if not 1 <= index <= strands - 1:
                raise IndexOutOfRange(
                    f"braid generator {index} outside 1..{strands - 1}", num_tok.line, num_tok.column
                )
            sign = 1
            if self.current.text == "'":
                self.advance()
                sign = -1
            letters.append((index, sign))
        return BraidWord(strands=strands, letters=tuple(letters))


def parse_fibration(text: str) -> FibrationSpec:
    """
    Parse fibration source text.

    Args:
        text: Source in the fibration description language

    Returns:
        FibrationSpec: The parsed fibration, separating genera canonicalized

    Raises:
        DSLSyntaxError: The text does not follow the grammar
        IndexOutOfRange: A generator index does not fit the declared genus
    """
    return _Parser(text).parse()


def format_braid(word: BraidWord) -> str:
    return " ".join(f"t{i}" + ("'" if s < 0 else "") for i, s in word.letters)


def format_cycle(cycle: SymmetricCycle) -> str:
    head = ("s" if cycle.is_separating else "a") + str(cycle.index)
    if len(cycle.conjugator) == 0:
        return head
    return f"conj({head}; {format_braid(cycle.conjugator)})"


def print_fibration(spec: FibrationSpec) -> str:
    """Render a fibration as canonical source text (a single line)."""
    cycles = ", ".join(format_cycle(c) for c in spec.word)
    return f"genus {spec.genus}; base {spec.base.value}; word = [{cycles}]"
