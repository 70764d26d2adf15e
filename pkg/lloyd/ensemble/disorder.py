"""Reproducible i.i.d. Cauchy couplings.

Every (master_seed, sample_index) pair keys its own Philox counter stream;
site i always reads the i-th 64-bit block of that stream, so a coupling does
not depend on how many sites are drawn or on which thread draws them.
"""
from dataclasses import dataclass
from typing import Optional

import numpy as np

from core.exceptions import InvalidArgumentError
from measures.cauchy import cauchy_sample

SEED_LIMIT = 2 ** 64
# shift of k * 2**-53 uniforms into the open interval (0, 1)
HALF_ULP = 2.0 ** -54


@dataclass(frozen=True, eq=False)
class DisorderSample:
    omegas: np.ndarray
    master_seed: Optional[int]
    sample_index: int
    scale: float = 0.0

    def __len__(self):
        return self.omegas.size

    @classmethod
    def free(cls, count):
        """All couplings zero: the free operator."""
        return cls(np.zeros(count), None, 0)

    def shifted(self, constant):
        return DisorderSample(
            self.omegas + constant, self.master_seed, self.sample_index,
            self.scale,
        )

    @property
    def provenance(self):
        return {
            'master_seed': self.master_seed,
            'sample_index': self.sample_index,
            'scale': self.scale,
        }


def _check_seed(master_seed, sample_index):
    if int(master_seed) != master_seed or not 0 <= master_seed < SEED_LIMIT:
        raise InvalidArgumentError(
            f'master seed must be an integer in [0, 2**64): {master_seed}'
        )
    if int(sample_index) != sample_index or not 0 <= sample_index < SEED_LIMIT:
        raise InvalidArgumentError(
            f'sample index must be a nonnegative integer: {sample_index}'
        )


def uniform_stream(master_seed, sample_index):
    _check_seed(master_seed, sample_index)
    key = np.array([master_seed, sample_index], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def draw_sample(kernel, count, master_seed, sample_index):
    if int(count) != count or count < 1:
        raise InvalidArgumentError(f'site count must be positive: {count}')
    uniforms = uniform_stream(master_seed, sample_index).random(int(count))
    omegas = cauchy_sample(kernel, uniforms + HALF_ULP)
    return DisorderSample(
        omegas, int(master_seed), int(sample_index), kernel.scale
    )
