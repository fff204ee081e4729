from typing import List, Optional, Sequence, Tuple, Union
import logging
import math
import numpy as np

from graphrepeater.utilities import constraints, gf2
from graphrepeater.utilities.exceptions import OracleScaleError
from graphrepeater.utilities.utils import LogicalRates

logger = logging.getLogger(__name__)

MAX_ENUMERATION_LENGTH = 15

Symbol = Union[int, str, None]


class ClassicalCode:
    """
    Classical Code
    ----------
    Binary linear code read out by a transversal measurement. Each logical mask is a parity
    functional on codewords; a decoded codeword with the wrong mask parity is a logical error.

    Parameters:
    ----------
    name (str):
        Name of the code
    generator (array_like):
        Generator rows over GF(2), shape (dimension, n)
    logical_masks (array_like):
        One parity mask per encoded bit, shape (k, n) or (n,)
    """

    def __init__(self, name:str, generator, logical_masks):
        self.name = name
        self.generator = gf2.as_gf2(generator)
        self.logical_masks = np.atleast_2d(gf2.as_gf2(logical_masks))

        if self.generator.ndim != 2:
            raise ValueError(f'generator must be 2D, got shape {self.generator.shape}')
        elif self.logical_masks.shape[1] != self.n:
            raise ValueError(f'logical masks must have length {self.n}')
        elif gf2.rank(self.generator) != self.dimension:
            raise ValueError('generator rows must be independent over GF(2)')

        # every mask must be a nonconstant functional on the code, jointly independent
        functionals = (self.generator.astype(np.int64) @ self.logical_masks.T.astype(np.int64)) % 2
        if gf2.rank(functionals.T) != self.k:
            raise ValueError('logical masks must be independent and nonconstant on the code')

        self._codewords: Optional[np.ndarray] = None
        self._parity_check: Optional[np.ndarray] = None

    def __repr__(self) -> str:
        return f"ClassicalCode(name={self.name!r}, n={self.n}, dimension={self.dimension}, k={self.k})"

    @property
    def n(self) -> int:
        return self.generator.shape[1]

    @property
    def dimension(self) -> int:
        return self.generator.shape[0]

    @property
    def k(self) -> int:
        return self.logical_masks.shape[0]

    @property
    def codewords(self) -> np.ndarray:
        """All 2^dimension codewords, shape (2^dimension, n)"""
        if self._codewords is None:
            if self.dimension > 16:
                raise OracleScaleError(f'{self.name}: {2**self.dimension} codewords are too many to list')
            messages = gf2.int_to_bits(np.arange(2**self.dimension), self.dimension)
            self._codewords = ((messages.astype(np.int64) @ self.generator.astype(np.int64)) % 2).astype(np.uint8)
        return self._codewords

    @property
    def logical_values(self) -> np.ndarray:
        """Parity of every codeword under every logical mask, shape (2^dimension, k)"""
        return ((self.codewords.astype(np.int64) @ self.logical_masks.T.astype(np.int64)) % 2).astype(np.uint8)

    @property
    def parity_check(self) -> np.ndarray:
        if self._parity_check is None:
            self._parity_check = gf2.nullspace(self.generator)
        return self._parity_check

    @property
    def minimum_distance(self) -> int:
        weights = self.codewords.sum(axis=1)
        return int(weights[weights > 0].min())

    @classmethod
    def cyclic(cls, name:str, n:int, generator_poly:int, logical_masks=None) -> 'ClassicalCode':
        """Cyclic code spanned by the shifts of a generator polynomial (bit i = coefficient of x^i).

        The default logical mask is the all-ones parity.
        """
        degree = generator_poly.bit_length() - 1
        g = gf2.int_to_bits(np.array([generator_poly]), degree + 1)[0]
        rows = np.zeros((n - degree, n), dtype=np.uint8)
        for shift in range(n - degree):
            rows[shift, shift:shift + degree + 1] = g
        if logical_masks is None:
            logical_masks = np.ones(n, dtype=np.uint8)
        return cls(name, rows, logical_masks)


def hamming_code() -> ClassicalCode:
    """[7,4,3] Hamming code, g(x) = 1 + x + x^3; measured blocks of the Steane code"""
    return ClassicalCode.cyclic('hamming-7-4', 7, 0b1011)

def golay_code() -> ClassicalCode:
    """[23,12,7] Golay code, g(x) = x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1"""
    return ClassicalCode.cyclic('golay-23-12', 23, 0xC75)


def _parse_word(word:Union[str, Sequence[Symbol]], n:int) -> Tuple[np.ndarray, np.ndarray]:
    symbols = list(word)
    if len(symbols) != n:
        raise ValueError(f'word must have length {n}, got {len(symbols)}')
    bits = np.zeros(n, dtype=np.uint8)
    known = np.ones(n, dtype=bool)
    for i, s in enumerate(symbols):
        if s is None or s == '?':
            known[i] = False
        elif s in (0, 1, '0', '1'):
            bits[i] = int(s)
        else:
            raise ValueError(f'position {i}: symbol must be 0, 1 or ?, got {s!r}')
    return bits, known

def _tie_sets(distances:np.ndarray, f_u:float) -> np.ndarray:
    """Most likely codewords per row of a (patterns, codewords) distance matrix"""
    if f_u < 0.5:
        best = distances.min(axis=1, keepdims=True)
    elif f_u > 0.5:
        best = distances.max(axis=1, keepdims=True)
    else:
        return np.ones_like(distances, dtype=bool)
    return distances == best

def decode_most_likely(word:Union[str, Sequence[Symbol]],
                       code:ClassicalCode,
                       f_u:float,
                       f_n:float) -> List[Tuple[Tuple[int, ...], float]]:
    """Codewords most likely to have produced the observed word.

    Args:
        word: per-position symbols 0, 1 or '?' (lost)
        code: code to decode
        f_u: flip probability of a position that was not lost
        f_n: loss probability; it scales every candidate alike

    Returns:
        the tie set as (codeword, weight) pairs with uniform weights
    """
    constraints.validate_probability(f_u, 'f_u')
    constraints.validate_probability(f_n, 'f_n')
    bits, known = _parse_word(word, code.n)
    cw = code.codewords
    distances = (cw[:, known] != bits[known]).sum(axis=1)[None, :]
    ties = np.nonzero(_tie_sets(distances, f_u)[0])[0]
    weight = 1.0 / len(ties)
    return [(tuple(int(b) for b in cw[i]), weight) for i in ties]

def enumerate_logical_rate(code:ClassicalCode, n_max:Optional[int], f_u:float, f_n:float) -> LogicalRates:
    """Exact logical flip rate and success probability by summing over every loss/flip pattern.

    Each position is lost with probability f_n, otherwise flipped with probability f_u. Patterns
    with more than n_max losses abort the block; the rest are decoded by decode_most_likely and
    count the fraction of the tie set with the wrong logical parity. The decoder commutes with
    adding codewords, so the all-zero codeword serves as the transmitted word.

    Raises:
        OracleScaleError: code longer than MAX_ENUMERATION_LENGTH
    """
    f_u = constraints.validate_probability(f_u, 'f_u')
    f_n = constraints.validate_probability(f_n, 'f_n')
    n = code.n
    if n > MAX_ENUMERATION_LENGTH:
        raise OracleScaleError(f'{code.name}: 3^{n} patterns are too many to enumerate')
    if n_max is None:
        n_max = n
    elif not 0 <= n_max <= n:
        raise ValueError(f'n_max must lie in 0..{n}, got {n_max}')

    cw = code.codewords
    logical = code.logical_values.astype(np.float64)
    flip_tables = {m: gf2.int_to_bits(np.arange(2**m), m) for m in range(n + 1)}

    fbar = 0.0
    p_succ = 0.0
    mass = 0.0
    for loss_mask in range(2**n):
        lost = gf2.int_to_bits(np.array([loss_mask]), n)[0].astype(bool)
        n_lost = int(lost.sum())
        m = n - n_lost
        flips = flip_tables[m]
        n_flips = flips.sum(axis=1)
        p_loss = f_n**n_lost * (1.0 - f_n)**m
        p_flip = np.power(f_u, n_flips) * np.power(1.0 - f_u, m - n_flips)
        block = p_loss * float(p_flip.sum())
        mass += block
        if n_lost > n_max:
            continue
        p_succ += block

        distances = (flips[:, None, :] != cw[None, :, ~lost]).sum(axis=2)
        ties = _tie_sets(distances, f_u)
        wrong = (ties.astype(np.float64) @ logical) / ties.sum(axis=1, keepdims=True)
        fbar += p_loss * float((p_flip * wrong.mean(axis=1)).sum())

    if not math.isclose(mass, 1.0, rel_tol=0.0, abs_tol=1e-9):
        raise ArithmeticError(f'pattern probabilities sum to {mass}, expected 1')
    logger.debug(f'{code.name}: n_max={n_max} f_u={f_u} f_n={f_n} -> fbar={fbar} p_succ={p_succ}')
    return LogicalRates(fbar_u=fbar, p_succ=p_succ)
