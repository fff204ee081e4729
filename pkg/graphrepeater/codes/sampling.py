from typing import Any, Optional, NamedTuple
from itertools import combinations
import math
import logging
import numpy as np
import torch

from graphrepeater.codes.ClassicalCode import ClassicalCode
from graphrepeater.utilities import constraints
from graphrepeater.utilities.exceptions import OracleScaleError
from graphrepeater.utilities.seed import SeedGenerator

logger = logging.getLogger(__name__)


class SampledRates(NamedTuple):
    fbar_u: float
    stderr: float
    p_succ: float
    trials: int


class ApproximationGap(NamedTuple):
    """Closed-form rate of a code next to the rate of its sampled syndrome-table decoder"""
    code: str
    f_u: float
    f_n: float
    table: float
    sampled: float
    stderr: float
    trials: int

    @property
    def gap(self) -> float:
        return self.sampled - self.table

    @property
    def sigmas(self) -> float:
        if self.stderr > 0:
            return self.gap / self.stderr
        return 0.0 if self.gap == 0 else math.copysign(math.inf, self.gap)


def coset_leaders(code:ClassicalCode) -> torch.Tensor:
    """Minimum-weight error pattern for every syndrome, indexed by the syndrome as an integer"""
    H = code.parity_check
    r = H.shape[0]
    if r > 16:
        raise OracleScaleError(f'{code.name}: syndrome table with 2^{r} entries is too large')
    powers = 1 << np.arange(r, dtype=np.int64)
    leaders = np.zeros((2**r, code.n), dtype=np.uint8)
    filled = np.zeros(2**r, dtype=bool)
    filled[0] = True
    for weight in range(1, code.n + 1):
        for support in combinations(range(code.n), weight):
            s = int((H[:, list(support)].sum(axis=1) % 2) @ powers)
            if not filled[s]:
                filled[s] = True
                leaders[s, list(support)] = 1
        if filled.all():
            break
    return torch.from_numpy(leaders).bool()

def sample_logical_rate(code:ClassicalCode,
                        f_u:float,
                        f_n:float,
                        trials:int,
                        seed:Optional[int] = None,
                        n_max:Optional[int] = None,
                        block_size:int = 2**16) -> SampledRates:
    """Monte-Carlo logical flip rate of a syndrome-table errors-and-erasures decoder.

    Lost positions are filled once with zeros and once with ones; both words are decoded
    through the coset-leader table and the candidate closer to the received bits wins, a tie
    counting one half when the two candidates disagree on the logical value. The returned
    rate is joint with success, like the closed-form tables.
    """
    f_u = constraints.validate_probability(f_u, 'f_u')
    f_n = constraints.validate_probability(f_n, 'f_n')
    if trials < 1:
        raise ValueError(f'trials must be positive, got {trials}')

    n = code.n
    H = torch.from_numpy(code.parity_check.astype(np.float32))
    powers = (2 ** torch.arange(H.shape[0], dtype=torch.int64))
    leaders = coset_leaders(code)
    mask = torch.from_numpy(code.logical_masks.astype(np.float32)).T
    seeds = SeedGenerator(seed)

    def decode(word:torch.Tensor) -> torch.Tensor:
        syndrome = (((word.float() @ H.T) % 2).long() * powers).sum(dim=1)
        return word ^ leaders[syndrome]

    def logical_value(word:torch.Tensor) -> torch.Tensor:
        return ((word.float() @ mask) % 2).mean(dim=1)

    wrong_total = 0.0
    wrong_sq_total = 0.0
    kept = 0
    done = 0
    block = 0
    while done < trials:
        size = min(block_size, trials - done)
        gen = seeds.spawn(block)
        lost = torch.rand((size, n), generator=gen) < f_n
        flipped = (torch.rand((size, n), generator=gen) < f_u) & ~lost

        c0 = decode(flipped)
        c1 = decode(flipped | lost)
        d0 = ((c0 ^ flipped) & ~lost).sum(dim=1)
        d1 = ((c1 ^ flipped) & ~lost).sum(dim=1)
        l0, l1 = logical_value(c0), logical_value(c1)
        wrong = torch.where(d0 < d1, l0, torch.where(d1 < d0, l1, (l0 + l1) / 2))

        if n_max is not None:
            ok = lost.sum(dim=1) <= n_max
            wrong = wrong * ok
            kept += int(ok.sum())
        else:
            kept += size
        wrong_total += float(wrong.sum())
        wrong_sq_total += float((wrong**2).sum())
        done += size
        block += 1

    mean = wrong_total / trials
    var = max(wrong_sq_total / trials - mean**2, 0.0)
    stderr = (var / trials) ** 0.5
    logger.debug(f'{code.name}: sampled fbar={mean:.6g} +- {stderr:.2g} over {trials} trials')
    return SampledRates(fbar_u=mean, stderr=stderr, p_succ=kept / trials, trials=trials)

def bounded_distance_failure(n:int, d:int, f_u:float, f_n:float) -> float:
    """Probability that 2 * flips + losses reaches d, the block error of a bounded-distance decoder"""
    f_u = constraints.validate_probability(f_u, 'f_u')
    f_n = constraints.validate_probability(f_n, 'f_n')
    flip = (1.0 - f_n) * f_u
    clean = (1.0 - f_n) * (1.0 - f_u)
    total = 0.0
    for s in range(n + 1):
        for t in range(n - s + 1):
            if 2 * t + s >= d:
                total += math.comb(n, s) * math.comb(n - s, t) * f_n**s * flip**t * clean**(n - s - t)
    return total

def approximation_gap(code:Any,
                      f_u:float,
                      f_n:float,
                      trials:int = 1_000_000,
                      seed:Optional[int] = None) -> ApproximationGap:
    """Sample the decoder of `code.classical` and report how far the closed-form rate sits from it.

    The gap is reported, not judged: a closed-form rate built on an approximation may sit
    several standard errors away from the sampled decoder.
    """
    sampled = sample_logical_rate(code.classical, f_u, f_n, trials, seed, n_max=code.n_max)
    report = ApproximationGap(code.name, f_u, f_n, code.rates(f_u, f_n).fbar_u,
                              sampled.fbar_u, sampled.stderr, trials)
    logger.info(f'{code.name} at f_u={f_u}, f_n={f_n}: table {report.table:.4g}, '
                f'sampled {report.sampled:.4g} +- {report.stderr:.2g} ({report.sigmas:+.1f} sigma)')
    return report
