from typing import Sequence, List, Tuple
import logging
import torch

logger = logging.getLogger(__name__)


class ScanHandler:
    """
    Scan Monitor
    ----------
    Stores the cost-performance ratio of every scanned repeater count for one or more runs
    (one run per code or distance) and picks the optimum of each run.

    Parameters
    ----------
    w_values : Sequence[int]
        Scanned repeater counts, sorted ascending.
    n_runs : int
        Number of independent scans sharing the same w grid.
    verbose : bool
        Log every pushed point at INFO level.
    """

    def __init__(self,
                 w_values:Sequence[int],
                 n_runs:int = 1,
                 verbose:bool = False):

        self.w_values = torch.as_tensor(list(w_values), dtype=torch.int64)
        self.verbose = verbose
        self.score = torch.full(
            size=(len(self.w_values), n_runs),
            fill_value=float('nan'),
            dtype=torch.float64
        )

    def __repr__(self):
        return f"ScanHandler(n_points={self.score.shape[0]}, n_runs={self.score.shape[1]}, verbose={self.verbose})"

    def push(self, C:float, point:int, run:int = 0):
        """Record the cost-performance ratio of scan point `point` in run `run`."""
        self.score[point, run] = C
        if self.verbose:
            w = int(self.w_values[point])
            logger.info(f"Run {run+1} | w: {w} | C: {C:.6g}")

    def feasible(self, run:int = 0) -> torch.Tensor:
        """Mask of scan points with w > 0 and finite C."""
        return (self.w_values > 0) & torch.isfinite(self.score[:, run])

    def best(self, run:int = 0) -> Tuple[int, float]:
        """Index and value of the smallest C among w > 0; ties resolve to the smallest w.

        Raises:
            LookupError: no feasible point in the run.
        """
        mask = self.feasible(run)
        if not bool(mask.any()):
            raise LookupError(f'run {run} has no feasible scan point')
        masked = torch.where(mask, self.score[:, run], torch.full_like(self.score[:, run], float('inf')))
        idx = int(torch.argmin(masked))
        return idx, float(masked[idx])

    def curve(self, run:int = 0) -> List[Tuple[int, float]]:
        return [(int(w), float(c)) for w, c in zip(self.w_values, self.score[:, run])]
