"""Resampling and intensity normalisation of raw images to working frames."""

from __future__ import annotations

import warnings

import numpy as np

from .frames import STANDARD_SIZE


def bilinear_resize(img: np.ndarray, out_h: int, out_w: int) -> np.ndarray:
    """Bilinear resample with pixel-centre alignment and edge clamping.

    Output pixel (i, j) samples the source at
    ``((i + 0.5) * in_h / out_h - 0.5, (j + 0.5) * in_w / out_w - 0.5)``.
    Resizing to the same shape is the identity; constants are preserved.
    """
    img = np.asarray(img, dtype=np.float64)
    in_h, in_w = img.shape
    ys = (np.arange(out_h) + 0.5) * in_h / out_h - 0.5
    xs = (np.arange(out_w) + 0.5) * in_w / out_w - 0.5
    y0 = np.floor(ys)
    x0 = np.floor(xs)
    wy = (ys - y0)[:, None]
    wx = (xs - x0)[None, :]
    y0 = y0.astype(np.int64)
    x0 = x0.astype(np.int64)
    y0c = np.clip(y0, 0, in_h - 1)
    y1c = np.clip(y0 + 1, 0, in_h - 1)
    x0c = np.clip(x0, 0, in_w - 1)
    x1c = np.clip(x0 + 1, 0, in_w - 1)
    top = img[np.ix_(y0c, x0c)] * (1 - wx) + img[np.ix_(y0c, x1c)] * wx
    bot = img[np.ix_(y1c, x0c)] * (1 - wx) + img[np.ix_(y1c, x1c)] * wx
    return top * (1 - wy) + bot * wy


def preprocess(raw_image: np.ndarray, source_range: tuple[float, float],
               size: int = STANDARD_SIZE) -> np.ndarray:
    """Resample a raw 2-D image to ``size``x``size`` and map it into [0, 1].

    ``source_range`` is the (min, max) intensity range of the source data;
    values are affinely mapped onto [0, 1] and clipped. A degenerate range
    (max == min) yields an all-zero frame with a warning.
    """
    arr = np.asarray(raw_image, dtype=np.float64)
    if arr.ndim != 2 or arr.size == 0:
        raise ValueError(f"raw image must be a non-empty 2-D array, got shape {arr.shape}")
    lo, hi = float(source_range[0]), float(source_range[1])
    if hi < lo:
        raise ValueError(f"source_range must satisfy min <= max, got ({lo}, {hi})")
    resized = bilinear_resize(arr, size, size)
    if hi == lo:
        warnings.warn("degenerate source_range (max == min): mapping to all-zeros",
                      stacklevel=2)
        return np.zeros((size, size), dtype=np.float64)
    return np.clip((resized - lo) / (hi - lo), 0.0, 1.0)
