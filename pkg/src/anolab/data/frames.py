"""Core sample containers: labelled grayscale frames and dataset splits."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

#: Canonical side length of the working resolution. Networks and dataset
#: assembly enforce it; the phantom renderer may produce other square sizes.
STANDARD_SIZE = 64


class Label(str, Enum):
    NORMAL = "normal"
    ABNORMAL = "abnormal"


@dataclass(frozen=True)
class Frame:
    """One grayscale image with subject identity and a normal/abnormal label.

    Pixels are a square 2-D float array with every value in [0, 1]. The
    array is frozen (non-writeable) on construction, as is the label.
    """

    pixels: np.ndarray
    subject_id: str
    frame_index: int
    label: Label

    def __post_init__(self) -> None:
        px = np.asarray(self.pixels, dtype=np.float32)
        if px.ndim != 2 or px.shape[0] != px.shape[1] or px.shape[0] < 2:
            raise ValueError(f"frame pixels must be a square 2-D array, got shape {px.shape}")
        if not np.all(np.isfinite(px)):
            raise ValueError("frame pixels must be finite")
        if px.min() < 0.0 or px.max() > 1.0:
            raise ValueError(
                f"frame pixels must lie in [0, 1], got range [{px.min():.4g}, {px.max():.4g}]"
            )
        if self.frame_index < 0:
            raise ValueError("frame_index must be non-negative")
        px.flags.writeable = False
        object.__setattr__(self, "pixels", px)
        object.__setattr__(self, "label", Label(self.label))

    @property
    def size(self) -> int:
        return self.pixels.shape[0]

    @property
    def ref(self) -> tuple[str, int]:
        return (self.subject_id, self.frame_index)


@dataclass
class DatasetSplit:
    """Training pool plus a test set with per-subject frame grouping.

    ``subject_groups`` maps subject_id to indices into ``test``; every test
    frame belongs to exactly one group. Training frames must all be normal
    and no subject may appear on both sides of the split.
    """

    train: list[Frame] = field(default_factory=list)
    test: list[Frame] = field(default_factory=list)
    subject_groups: dict[str, list[int]] = field(default_factory=dict)

    def __post_init__(self) -> None:
        for fr in self.train:
            if fr.label is not Label.NORMAL:
                raise ValueError(f"training frame {fr.ref} is not labelled normal")
        train_subjects = {fr.subject_id for fr in self.train}
        test_subjects = {fr.subject_id for fr in self.test}
        overlap = train_subjects & test_subjects
        if overlap:
            raise ValueError(f"subjects present in both train and test: {sorted(overlap)[:5]}")
        covered = [i for idxs in self.subject_groups.values() for i in idxs]
        if self.subject_groups and sorted(covered) != list(range(len(self.test))):
            raise ValueError("subject_groups must cover every test frame exactly once")

    @staticmethod
    def group_by_subject(frames: list[Frame]) -> dict[str, list[int]]:
        groups: dict[str, list[int]] = {}
        for i, fr in enumerate(frames):
            groups.setdefault(fr.subject_id, []).append(i)
        return groups
