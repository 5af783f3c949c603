"""The Cantor domain: finite and eventually periodic words under the
prefix order"""
import itertools
import math
import re
from dataclasses import dataclass
from typing import Iterable, List, Optional

from core.exceptions import AlphabetMismatch, NotDirected, ParseError
from poset_lab.preorder import FinitePreorder

BINARY = "01"
PERIODIC = re.compile(
    r"^(?P<symbols>[^()]*)(\((?P<period>[^()]*)\)(\^(w|ω))?)?$"
)


@dataclass(frozen=True)
class CantorWord:
    """`symbols` followed, for an infinite word, by `period` repeated
    forever"""
    symbols: str
    period: Optional[str] = None
    alphabet: str = BINARY

    def __post_init__(self):
        if self.period == "":
            raise ParseError("empty period")
        used = set(self.symbols) | set(self.period or "")
        if not used <= set(self.alphabet):
            raise AlphabetMismatch(
                f"symbols {sorted(used - set(self.alphabet))} not in "
                f"{self.alphabet!r}"
            )

    @classmethod
    def parse(cls, text: str, alphabet: str = BINARY) -> "CantorWord":
        """"0110" is finite, "01(10)" or "01(10)^w" repeats 10 forever"""
        match = PERIODIC.match(text.strip())
        if match is None:
            raise ParseError(f"not a word: {text!r}")
        return cls(match["symbols"], match["period"], alphabet)

    @property
    def is_finite(self) -> bool:
        return self.period is None

    @property
    def length(self) -> float:
        return len(self.symbols) if self.is_finite else math.inf

    def prefix(self, k: int) -> str:
        """First k symbols, expanding the period as far as needed"""
        if self.is_finite or k <= len(self.symbols):
            return self.symbols[:k]
        tail = k - len(self.symbols)
        repeats = -(-tail // len(self.period))
        return self.symbols + (self.period * repeats)[:tail]

    def __str__(self) -> str:
        if self.is_finite:
            return self.symbols or "ε"
        return f"{self.symbols}({self.period})^w"


def _check_alphabet(x: CantorWord, y: CantorWord) -> None:
    if x.alphabet != y.alphabet:
        raise AlphabetMismatch(f"{x.alphabet!r} against {y.alphabet!r}")


def cantor_leq(x: CantorWord, y: CantorWord) -> bool:
    """x is a prefix of y"""
    _check_alphabet(x, y)
    if x.is_finite:
        k = len(x.symbols)
        return k <= y.length and y.prefix(k) == x.symbols
    if y.is_finite:
        return False
    # two eventually periodic words agree everywhere once they agree this far
    span = (max(len(x.symbols), len(y.symbols))
            + math.lcm(len(x.period), len(y.period)))
    return x.prefix(span) == y.prefix(span)


def cantor_equal(x: CantorWord, y: CantorWord) -> bool:
    return cantor_leq(x, y) and cantor_leq(y, x)


def cantor_way_below(x: CantorWord, y: CantorWord) -> bool:
    """Finite prefixes are exactly the compact approximations"""
    return x.is_finite and cantor_leq(x, y)


def cantor_sup(words: Iterable[CantorWord]) -> CantorWord:
    """Supremum of a directed set of words: its longest member"""
    words = list(words)
    if not words:
        raise NotDirected("empty set of words")
    for x, y in itertools.combinations(words, 2):
        if not (cantor_leq(x, y) or cantor_leq(y, x)):
            raise NotDirected(f"{x} and {y} have no common extension")
    top = words[0]
    for word in words[1:]:
        if cantor_leq(top, word):
            top = word
    return top


def finite_prefixes(x: CantorWord, upto: int) -> List[CantorWord]:
    """The chain of prefixes of x of length 0..upto"""
    if x.is_finite:
        upto = min(upto, len(x.symbols))
    return [CantorWord(x.prefix(k), alphabet=x.alphabet)
            for k in range(upto + 1)]


def all_words(k: int, alphabet: str = BINARY) -> List[CantorWord]:
    """Finite words of length at most k, shortest first"""
    return [
        CantorWord("".join(letters), alphabet=alphabet)
        for length in range(k + 1)
        for letters in itertools.product(alphabet, repeat=length)
    ]


def cantor_truncation(k: int, alphabet: str = BINARY) -> FinitePreorder:
    """Prefix order on the words of length at most k"""
    return FinitePreorder.from_predicate(all_words(k, alphabet), cantor_leq)
