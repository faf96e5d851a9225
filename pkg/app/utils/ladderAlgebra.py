"""
Ladder Algebra Module

This module evaluates expectation values of polynomials in bosonic ladder
operators over a coherent product state. An operator word is a tuple of
letters ``(mode index, is_creation)``. The modes commute with each other, so
a word factorizes into one letter pattern per mode. Each pattern is
normal-ordered once with sympy and cached. In a coherent state a normal
ordered monomial (a^dagger)^p a^q evaluates to conj(alpha)^p alpha^q.

Author: Sasank Tanikella
Created: 10-16-2026
"""

from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

import numpy as np
from sympy import Add, Mul, expand
from sympy.physics.quantum import Dagger
from sympy.physics.quantum.boson import BosonOp
from sympy.physics.quantum.operatorordering import normal_ordered_form

from app.simulation_config import MODE_ORDER

Letter = Tuple[int, bool]
Word = Tuple[Letter, ...]
Term = Tuple[int, complex, Word]

_BOSON = BosonOp("b")
_ORDERING_DEPTH = 64


def parse_word(text: str) -> Word:
    """
    Parses a word such as ``"L1 L1d Vd"``.

    A trailing ``d`` marks a creation operator.
    """
    letters = []
    for token in text.split():
        created = token.endswith("d")
        name = token[:-1] if created else token
        letters.append((MODE_ORDER.index(name), created))
    return tuple(letters)


@lru_cache(maxsize=None)
def normal_form(pattern: Tuple[bool, ...]) -> Tuple[Tuple[int, int, int], ...]:
    """
    Normal-ordered expansion of a single-mode letter pattern.

    Args:
        pattern (Tuple[bool, ...]): True for a creation letter, left to right

    Returns:
        Tuple[Tuple[int, int, int], ...]: (coefficient, creations,
        annihilations) per normal-ordered monomial

    Raises:
        RuntimeError: sympy returned a term that is not normal ordered
    """
    if not pattern:
        return ((1, 0, 0),)
    product = Mul(*[Dagger(_BOSON) if created else _BOSON for created in pattern])
    ordered = expand(normal_ordered_form(product, recursive_limit=_ORDERING_DEPTH))
    monomials = []
    for term in Add.make_args(ordered):
        commutative, noncommutative = term.args_cnc()
        creations = annihilations = 0
        for factor in noncommutative:
            base, power = factor.as_base_exp()
            if base.is_annihilation:
                annihilations += int(power)
            elif annihilations:
                raise RuntimeError(f"pattern {pattern} did not normal-order: {ordered}")
            else:
                creations += int(power)
        monomials.append((int(Mul(*commutative)), creations, annihilations))
    return tuple(monomials)


def _mode_patterns(word: Word) -> Dict[int, Tuple[bool, ...]]:
    patterns: Dict[int, List[bool]] = {}
    for mode, created in word:
        patterns.setdefault(mode, []).append(created)
    return {mode: tuple(letters) for mode, letters in patterns.items()}


def coherent_expectation(word: Word, alphas: Sequence[complex]) -> complex:
    """Expectation of one word in the coherent product state with amplitudes alphas."""
    value = 1.0 + 0j
    for mode, pattern in _mode_patterns(word).items():
        alpha = alphas[mode]
        value *= sum(
            coeff * np.conj(alpha) ** p * alpha ** q
            for coeff, p, q in normal_form(pattern)
        )
    return complex(value)


def dagger(terms: Sequence[Term]) -> List[Term]:
    """Hermitian conjugate of an operator polynomial."""
    return [
        (order, complex(np.conj(coeff)), tuple((mode, not created) for mode, created in reversed(word)))
        for order, coeff, word in terms
    ]


def multiply(left: Sequence[Term], right: Sequence[Term], max_order: int = 2) -> List[Term]:
    """Product of two operator polynomials, truncated at total coupling order max_order."""
    return [
        (lo + ro, lc * rc, lw + rw)
        for lo, lc, lw in left
        for ro, rc, rw in right
        if lo + ro <= max_order
    ]


def expectation_by_order(terms: Sequence[Term], alphas: Sequence[complex], max_order: int = 2) -> np.ndarray:
    """Coherent-state expectation split by coupling order (index = order)."""
    values = np.zeros(max_order + 1, dtype=complex)
    for order, coeff, word in terms:
        if order <= max_order:
            values[order] += coeff * coherent_expectation(word, alphas)
    return values


def truncated_product(first: np.ndarray, second: np.ndarray, max_order: int = 2) -> complex:
    """Product of two order-split series keeping total order <= max_order."""
    return complex(sum(
        first[i] * second[j]
        for i in range(max_order + 1)
        for j in range(max_order + 1 - i)
    ))
