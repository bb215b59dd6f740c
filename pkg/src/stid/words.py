"""Words over the alphabet {a, b}, identities, evaluation and substitution."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Callable, TypeVar

T = TypeVar("T")

ALPHABET = "ab"


class WordParseError(ValueError):
    def __init__(self, msg: str, line: int | None = None, col: int | None = None):
        self.msg = msg
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}" + (f" column {col}" if col is not None else "") + ": "
        elif col is not None:
            where = f"column {col}: "
        super().__init__(where + msg)


class TrivialPairError(ValueError):
    """A composition produced two equal words."""

    def __init__(self, word: Word):
        self.word = word
        super().__init__(f"trivial composed pair: both sides {word}")


@dataclass(frozen=True, order=True)
class Word:
    letters: str

    def __post_init__(self):
        if not self.letters:
            raise WordParseError("empty word")
        bad = [c for c in self.letters if c not in ALPHABET]
        if bad:
            raise WordParseError(f"illegal letter {bad[0]!r}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return self.letters

    def __add__(self, other: Word) -> Word:
        return Word(self.letters + other.letters)


@dataclass(frozen=True)
class Identity:
    """An ordered word pair ``u = v``.

    Equal sides are representable so that a trivial pair can be reported
    as such; ``trivial`` tells them apart.
    """

    u: Word
    v: Word

    @property
    def trivial(self) -> bool:
        return self.u == self.v

    @property
    def length(self) -> int:
        return max(len(self.u), len(self.v))

    def swapped_letters(self) -> Identity:
        """The same identity with ``a`` and ``b`` exchanged."""
        tr = str.maketrans("ab", "ba")
        return Identity(Word(self.u.letters.translate(tr)), Word(self.v.letters.translate(tr)))

    def __str__(self) -> str:
        return f"<{self.u}, {self.v}>"


def parse_word(text: str) -> Word:
    """Parse a word; ``.`` and whitespace are separators and are ignored."""
    letters = []
    for pos, ch in enumerate(text, start=1):
        if ch in ALPHABET:
            letters.append(ch)
        elif ch == "." or ch.isspace():
            continue
        else:
            raise WordParseError(f"illegal character {ch!r}", col=pos)
    if not letters:
        raise WordParseError("empty word")
    return Word("".join(letters))


def content(w: Word) -> tuple[int, int]:
    return w.letters.count("a"), w.letters.count("b")


def evaluate(w: Word, s: T, t: T, mul: Callable[[T, T], T]) -> T:
    """Left-to-right product of ``w`` with ``a -> s`` and ``b -> t``."""
    return reduce(mul, (s if c == "a" else t for c in w.letters))


def substitute(w: Word, u1: Word, v1: Word) -> Word:
    return Word("".join(u1.letters if c == "a" else v1.letters for c in w.letters))


def compose_identity(outer: Identity, inner: Identity) -> Identity:
    """``<u[u'/v'], v[u'/v']>``; raises ``TrivialPairError`` if both sides agree."""
    u = substitute(outer.u, inner.u, inner.v)
    v = substitute(outer.v, inner.u, inner.v)
    if u == v:
        raise TrivialPairError(u)
    return Identity(u, v)


def parse_identity(text: str) -> Identity:
    """Parse the identity file format (``u: <word>`` and ``v: <word>`` lines)."""
    sides: dict[str, Word] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("u", "v"):
            col = raw.index(line[0]) + 1
            raise WordParseError("expected 'u: <word>' or 'v: <word>'", line=lineno, col=col)
        if key in sides:
            raise WordParseError(f"duplicate side {key!r}", line=lineno, col=1)
        offset = raw.index(":") + 1
        try:
            sides[key] = parse_word(raw[offset:])
        except WordParseError as exc:
            col = None if exc.col is None else exc.col + offset
            raise WordParseError(exc.msg, line=lineno, col=col) from None
    missing = [k for k in ("u", "v") if k not in sides]
    if missing:
        raise WordParseError(f"missing side {missing[0]!r}")
    return Identity(sides["u"], sides["v"])


def format_identity(identity: Identity, comments: list[str] | None = None) -> str:
    head = "".join(f"# {c}\n" for c in comments or [])
    return f"{head}u: {identity.u}\nv: {identity.v}\n"
