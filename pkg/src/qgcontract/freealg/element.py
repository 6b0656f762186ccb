"""
Elements of the free associative algebra over Q(s, h) on named generators.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Mapping
from fractions import Fraction
from typing import Union

from ..scalar import ONE, ZERO, ScalarQH
from ..tensor import RingMatrix

Word = tuple[str, ...]
Coefficient = Union[ScalarQH, int, Fraction]

UNIT_NAME = "I"


def _as_scalar(value: Coefficient) -> ScalarQH:
    if isinstance(value, ScalarQH):
        return value
    if isinstance(value, (int, Fraction)):
        return ScalarQH(value)
    raise TypeError(f"Coefficients must be scalars, got {type(value).__name__}.")


def format_word(word: Word) -> str:
    """
    Render a word as space-separated generator names; the empty word is I.
    """
    return " ".join(word) if word else UNIT_NAME


class FreeElement:
    """
    Finite linear combination of words. Zero coefficients are never stored
    and the empty word is the algebra unit.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Word, Coefficient] | None = None) -> None:
        self._terms: dict[Word, ScalarQH] = {}
        if terms:
            for word, coeff in terms.items():
                value = _as_scalar(coeff)
                if value:
                    self._terms[tuple(word)] = value

    @classmethod
    def _wrap(cls, terms: dict[Word, ScalarQH]) -> FreeElement:
        obj = cls.__new__(cls)
        obj._terms = {word: coeff for word, coeff in terms.items() if coeff}
        return obj

    @classmethod
    def generator(cls, name: str) -> FreeElement:
        if not name or name == UNIT_NAME:
            raise ValueError(f"Invalid generator name '{name}'.")
        return cls._wrap({(name,): ONE})

    @classmethod
    def unit(cls) -> FreeElement:
        return cls._wrap({(): ONE})

    @classmethod
    def word(cls, *names: str, coeff: Coefficient = 1) -> FreeElement:
        return cls({tuple(names): coeff})

    @classmethod
    def zero(cls) -> FreeElement:
        return cls._wrap({})

    ### Access ###

    @property
    def terms(self) -> dict[Word, ScalarQH]:
        """
        Copy of the word -> coefficient map.
        """
        return dict(self._terms)

    def coefficient(self, word: Word) -> ScalarQH:
        return self._terms.get(tuple(word), ZERO)

    def words(self) -> list[Word]:
        return list(self._terms)

    def generators(self) -> set[str]:
        return {name for word in self._terms for name in word}

    @property
    def degree(self) -> int:
        """
        Length of the longest word (0 for the zero element).
        """
        return max((len(word) for word in self._terms), default=0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[Word, ScalarQH]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    ### Arithmetic ###

    def __add__(self, other: FreeElement | Coefficient) -> FreeElement:
        other = _coerce(other)
        terms = dict(self._terms)
        for word, coeff in other._terms.items():
            terms[word] = terms.get(word, ZERO) + coeff
        return FreeElement._wrap(terms)

    __radd__ = __add__

    def __neg__(self) -> FreeElement:
        return FreeElement._wrap({word: -coeff for word, coeff in self._terms.items()})

    def __sub__(self, other: FreeElement | Coefficient) -> FreeElement:
        return self + (-_coerce(other))

    def __rsub__(self, other: Coefficient) -> FreeElement:
        return _coerce(other) - self

    def __mul__(self, other: FreeElement | Coefficient) -> FreeElement:
        if not isinstance(other, FreeElement):
            scalar = _as_scalar(other)
            return FreeElement._wrap(
                {word: coeff * scalar for word, coeff in self._terms.items()}
            )
        terms: dict[Word, ScalarQH] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                word = w1 + w2
                terms[word] = terms.get(word, ZERO) + c1 * c2
        return FreeElement._wrap(terms)

    def __rmul__(self, other: Coefficient) -> FreeElement:
        scalar = _as_scalar(other)
        return FreeElement._wrap(
            {word: scalar * coeff for word, coeff in self._terms.items()}
        )

    def __pow__(self, exponent: int) -> FreeElement:
        if exponent < 0:
            raise ValueError("Free algebra elements have no inverses.")
        result = FreeElement.unit()
        for _ in range(exponent):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, ScalarQH)):
            other = _coerce(other)
        if not isinstance(other, FreeElement):
            return NotImplemented
        if self._terms.keys() != other._terms.keys():
            return False
        return all(coeff == other._terms[word] for word, coeff in self._terms.items())

    __hash__ = None  # type: ignore[assignment]

    ### Transformations ###

    def map_coefficients(self, func: Callable[[ScalarQH], ScalarQH]) -> FreeElement:
        return FreeElement._wrap(
            {word: func(coeff) for word, coeff in self._terms.items()}
        )

    def subs_h(self, value: int | Fraction) -> FreeElement:
        return self.map_coefficients(lambda c: c.subs_h(value))

    def substitute(self, mapping: Mapping[str, FreeElement]) -> FreeElement:
        """
        Algebra homomorphism sending each generator in ``mapping`` to its
        image; other generators are kept.
        """
        result = FreeElement.zero()
        for word, coeff in self._terms.items():
            image = FreeElement._wrap({(): coeff})
            for name in word:
                image = image * mapping.get(name, FreeElement.generator(name))
            result = result + image
        return result

    def evaluate(
        self,
        ops: Mapping[str, RingMatrix],
        identity: RingMatrix,
        cache: dict[Word, RingMatrix] | None = None,
    ) -> RingMatrix:
        """
        Image under the representation sending generators to matrices.

        Arguments:
            ops (Mapping[str, RingMatrix]): Matrix of every generator.
            identity (RingMatrix): Image of the unit.
            cache (dict | None): Word products shared between calls.

        Raises:
            KeyError: If a generator has no matrix.
        """
        if cache is None:
            cache = {}
        result = RingMatrix.zeros(identity.dim, identity.factors)
        for word, coeff in self._terms.items():
            result = result + _word_matrix(word, ops, identity, cache) * coeff
        return result

    ### Rendering ###

    def sorted_terms(
        self, key: Callable[[Word], object] | None = None
    ) -> list[tuple[Word, ScalarQH]]:
        if key is None:
            key = _default_word_key
        return sorted(self._terms.items(), key=lambda item: key(item[0]))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for word, coeff in self.sorted_terms():
            rendered = format_word(word)
            if coeff == 1:
                parts.append(f"+ {rendered}")
            elif coeff == -1:
                parts.append(f"- {rendered}")
            else:
                parts.append(f"+ ({coeff})*{rendered}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self) -> str:
        return f"FreeElement({self})"


def _default_word_key(word: Word) -> tuple[int, Word]:
    return len(word), word


def _coerce(value: FreeElement | Coefficient) -> FreeElement:
    if isinstance(value, FreeElement):
        return value
    return FreeElement._wrap({(): _as_scalar(value)})


def _word_matrix(
    word: Word,
    ops: Mapping[str, RingMatrix],
    identity: RingMatrix,
    cache: dict[Word, RingMatrix],
) -> RingMatrix:
    if not word:
        return identity
    if word in cache:
        return cache[word]
    if word[-1] not in ops:
        raise KeyError(f"No matrix for generator '{word[-1]}'.")
    matrix = _word_matrix(word[:-1], ops, identity, cache) @ ops[word[-1]]
    cache[word] = matrix
    return matrix
