# apolar/shared/blocks.py
"""
State vectors split into per-size blocks of numpy object arrays holding exact scalars.
Both minor and maximal-minor vectors are BlockVectors; they differ only in block shapes.
"""
from __future__ import annotations
from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

import numpy as np

from .scalars import EXACT, Scalar, ScalarMode


def zeros(shape, mode: ScalarMode) -> np.ndarray:
    return np.full(shape, mode.zero, dtype=object)


@dataclass(frozen=True, eq=False)
class BlockVector:
    d: int
    blocks: Tuple[np.ndarray, ...]
    mode: ScalarMode = EXACT

    @property
    def length(self) -> int:
        return sum(int(b.size) for b in self.blocks)

    @property
    def scalar(self) -> Scalar:
        """The size-0 slot (coefficient of the empty minor)."""
        return self.blocks[0].flat[0]

    def _same(self, other: "BlockVector") -> None:
        if type(self) is not type(other) or self.d != other.d:
            raise ValueError("vectors live in different spaces")
        self.mode.require_same(other.mode)

    def __add__(self, other: "BlockVector") -> "BlockVector":
        self._same(other)
        return type(self)(self.d, tuple(a + b for a, b in zip(self.blocks, other.blocks)), self.mode)

    def __sub__(self, other: "BlockVector") -> "BlockVector":
        self._same(other)
        return type(self)(self.d, tuple(a - b for a, b in zip(self.blocks, other.blocks)), self.mode)

    def scale(self, c) -> "BlockVector":
        c = self.mode.convert(c)
        return type(self)(self.d, tuple(b * c for b in self.blocks), self.mode)

    def is_zero(self) -> bool:
        return all(not x for b in self.blocks for x in b.flat)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BlockVector) or type(self) is not type(other):
            return NotImplemented
        if self.d != other.d or self.mode != other.mode:
            return False
        return all(a.shape == b.shape and all(x == y for x, y in zip(a.flat, b.flat))
                   for a, b in zip(self.blocks, other.blocks))

    __hash__ = None  # type: ignore[assignment]

    def nonzero(self) -> Iterator[Tuple[int, Tuple[int, ...], Scalar]]:
        """(size k, array index, value) for every nonzero slot."""
        for k, b in enumerate(self.blocks):
            for idx in zip(*np.nonzero(np.vectorize(bool, otypes=[bool])(b))) if b.size else ():
                yield k, tuple(int(i) for i in idx), b[idx]


def accumulate(target: np.ndarray, indices: Sequence, values: np.ndarray) -> None:
    """target[indices] += values, with repeated indices summed."""
    np.add.at(target, indices, values)
