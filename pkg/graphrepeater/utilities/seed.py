from typing import Optional
import torch


class SeedGenerator:
    """Owns a seeded torch.Generator; Monte-Carlo blocks get their own derived streams."""

    def __init__(self, seed: Optional[int] = None):
        if seed is None:
            seed = int(torch.seed())
        self._seed = int(seed)
        self.generator = torch.Generator().manual_seed(self._seed)

    def __repr__(self) -> str:
        return f"SeedGenerator(seed={self.seed})"

    def __call__(self) -> torch.Generator:
        return self.generator

    @property
    def seed(self) -> int:
        return self._seed

    @seed.setter
    def seed(self, seed: int) -> None:
        self._seed = int(seed)
        self.generator = torch.Generator().manual_seed(self._seed)

    def spawn(self, stream: int) -> torch.Generator:
        """Independent generator for stream index `stream`, fixed by (seed, stream) alone."""
        mixed = (self._seed * 0x9E3779B97F4A7C15 + (stream + 1) * 0xBF58476D1CE4E5B9) % (2**63 - 1)
        return torch.Generator().manual_seed(mixed)

    def randbit(self) -> int:
        return int(torch.randint(0, 2, (1,), generator=self.generator).item())
