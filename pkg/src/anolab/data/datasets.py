"""Assembly of the two evaluation dataset layouts.

Layout 1 is a balanced frame-level test set drawn without replacement from
normal and abnormal pools. Layout 2 combines single normal frames with
multi-view abnormal subjects, either keeping one random view per subject or
all views grouped for subject-level fusion.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .frames import DatasetSplit, Frame, Label


class Dataset2Mode(str, Enum):
    ONE_RANDOM_FRAME = "one_random_frame"
    ALL_FRAMES = "all_frames"


def make_dataset1(normal_pool: list[Frame], abnormal_pool: list[Frame],
                  n_per_class: int, seed: int) -> DatasetSplit:
    """Balanced test set: ``n_per_class`` frames per class, sampled without
    replacement, deterministic by seed."""
    if n_per_class < 0:
        raise ValueError("n_per_class must be non-negative")
    for name, pool in (("normal", normal_pool), ("abnormal", abnormal_pool)):
        if len(pool) < n_per_class:
            raise ValueError(
                f"{name} pool has {len(pool)} frames, need {n_per_class}"
            )
    rng = np.random.default_rng(seed)
    idx_n = rng.choice(len(normal_pool), size=n_per_class, replace=False)
    idx_a = rng.choice(len(abnormal_pool), size=n_per_class, replace=False)
    test = [normal_pool[i] for i in idx_n] + [abnormal_pool[i] for i in idx_a]
    return DatasetSplit(train=[], test=test,
                        subject_groups=DatasetSplit.group_by_subject(test))


def make_dataset2(normal_frames: list[Frame],
                  abnormal_subjects: dict[str, list[Frame]],
                  mode: Dataset2Mode | str, seed: int) -> DatasetSplit:
    """Normal frames plus abnormal subjects holding 1..4 views each.

    ``one_random_frame`` keeps exactly one seeded choice per abnormal
    subject; ``all_frames`` keeps every view and the subject grouping needed
    for score fusion.
    """
    mode = Dataset2Mode(mode)
    rng = np.random.default_rng(seed)
    for sid in sorted(abnormal_subjects):
        views = abnormal_subjects[sid]
        if not 1 <= len(views) <= 4:
            raise ValueError(f"subject {sid!r} has {len(views)} frames, expected 1..4")
        for fr in views:
            if fr.label is not Label.ABNORMAL:
                raise ValueError(f"subject {sid!r} contains a non-abnormal frame")

    test = list(normal_frames)
    if mode is Dataset2Mode.ONE_RANDOM_FRAME:
        for sid in sorted(abnormal_subjects):
            views = abnormal_subjects[sid]
            test.append(views[int(rng.integers(len(views)))])
    else:
        for sid in sorted(abnormal_subjects):
            test.extend(abnormal_subjects[sid])
    return DatasetSplit(train=[], test=test,
                        subject_groups=DatasetSplit.group_by_subject(test))
