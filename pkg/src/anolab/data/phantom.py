"""Synthetic four-chamber cardiac phantoms with ultrasound-like speckle.

A phantom is a bright tissue disc containing four dark elliptical chambers
separated by a septal cross. Abnormal phantoms shrink the designated left
chamber by an area factor drawn from a configurable range, mimicking a
severely underdeveloped chamber. Multiplicative Rayleigh speckle supplies
the granular texture. All randomness flows from one seeded generator, so
generation is a pure function of (config, counts, seed).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .frames import Frame, Label

# Template geometry in unit coordinates (x right, y down): value and ellipse
# (cx, cy, semi_x, semi_y). The first chamber is the "left ventricle" that
# abnormal rendering shrinks.
TISSUE_LEVEL = 0.50
DISC = (0.50, 0.50, 0.42, 0.36, 0.72)
CHAMBER_LEVEL = 0.08
CHAMBERS = (
    ("left_ventricle", 0.36, 0.37, 0.105, 0.135),
    ("right_ventricle", 0.64, 0.37, 0.115, 0.135),
    ("left_atrium", 0.37, 0.65, 0.095, 0.105),
    ("right_atrium", 0.63, 0.65, 0.100, 0.110),
)
RAYLEIGH_MEAN = math.sqrt(math.pi / 2.0)


@dataclass(frozen=True)
class PhantomConfig:
    """Rendering parameters for the synthetic phantoms.

    ``left_chamber_shrink_range`` is the interval of *area* factors applied
    to the left-ventricle ellipse of abnormal frames. ``geometry_jitter`` is
    a fraction of the image size applied to ellipse centres and axes;
    ``rotation_range`` is in degrees.
    """

    image_size: int = 64
    chamber_count: int = 4
    left_chamber_shrink_range: tuple[float, float] = (0.05, 0.30)
    speckle_strength: float = 0.25
    geometry_jitter: float = 0.02
    rotation_range: float = 8.0

    def __post_init__(self) -> None:
        if self.image_size <= 0:
            raise ValueError(f"image_size must be positive, got {self.image_size}")
        if self.chamber_count != 4:
            raise ValueError("only four-chamber phantoms are supported")
        lo, hi = self.left_chamber_shrink_range
        if not (0.0 < lo < hi < 1.0):
            raise ValueError(
                f"left_chamber_shrink_range must satisfy 0 < lo < hi < 1, got ({lo}, {hi})"
            )
        if self.speckle_strength < 0:
            raise ValueError("speckle_strength must be non-negative")
        if self.geometry_jitter < 0 or self.rotation_range < 0:
            raise ValueError("geometry_jitter and rotation_range must be non-negative")


def left_chamber_template_area(config: PhantomConfig) -> float:
    """Analytic pixel area of the unshrunk left-ventricle ellipse."""
    _, _, _, ax, ay = CHAMBERS[0]
    return math.pi * ax * ay * config.image_size**2


def _paint_ellipse(img, grid_x, grid_y, cx, cy, ax, ay, angle, value, edge_px):
    """Blend an anti-aliased rotated ellipse of ``value`` into ``img``."""
    dx = grid_x - cx
    dy = grid_y - cy
    cos_t, sin_t = math.cos(angle), math.sin(angle)
    xr = cos_t * dx + sin_t * dy
    yr = -sin_t * dx + cos_t * dy
    r = np.sqrt((xr / ax) ** 2 + (yr / ay) ** 2)
    soft = edge_px / (img.shape[0] * math.sqrt(ax * ay))
    alpha = np.clip((1.0 + soft / 2.0 - r) / soft, 0.0, 1.0)
    img *= 1.0 - alpha
    img += value * alpha


def _render_geometry(config: PhantomConfig, rng: np.random.Generator,
                     shrink: float | None) -> np.ndarray:
    """Noise-free geometric render; ``shrink`` is the LV area factor or None."""
    n = config.image_size
    coords = (np.arange(n) + 0.5) / n
    grid_x, grid_y = np.meshgrid(coords, coords)

    theta = math.radians(rng.uniform(-config.rotation_range, config.rotation_range))
    j = config.geometry_jitter
    shift = rng.uniform(-j, j, size=2)
    cos_t, sin_t = math.cos(theta), math.sin(theta)

    def place(cx, cy, ax, ay):
        # rotate about the heart centre, then shift the whole heart
        rx, ry = cx - 0.5, cy - 0.5
        cx_r = 0.5 + cos_t * rx - sin_t * ry + shift[0]
        cy_r = 0.5 + sin_t * rx + cos_t * ry + shift[1]
        ax_j = ax * (1.0 + rng.uniform(-j, j))
        ay_j = ay * (1.0 + rng.uniform(-j, j))
        return cx_r, cy_r, ax_j, ay_j

    img = np.full((n, n), TISSUE_LEVEL, dtype=np.float64)
    dcx, dcy, dax, day, dval = DISC
    _paint_ellipse(img, grid_x, grid_y, *place(dcx, dcy, dax, day), theta, dval, 1.5)

    for i, (_, cx, cy, ax, ay) in enumerate(CHAMBERS):
        if i == 0 and shrink is not None:
            scale = math.sqrt(shrink)
            ax, ay = ax * scale, ay * scale
        _paint_ellipse(img, grid_x, grid_y, *place(cx, cy, ax, ay), theta,
                       CHAMBER_LEVEL, 1.0)
    return img


def _apply_speckle(img: np.ndarray, config: PhantomConfig,
                   rng: np.random.Generator) -> np.ndarray:
    if config.speckle_strength == 0:
        return np.clip(img, 0.0, 1.0)
    noise = rng.rayleigh(scale=1.0, size=img.shape)
    out = img * (1.0 + config.speckle_strength * (noise - RAYLEIGH_MEAN))
    return np.clip(out, 0.0, 1.0)


def _render_frame(config: PhantomConfig, rng: np.random.Generator,
                  shrink: float | None) -> np.ndarray:
    return _apply_speckle(_render_geometry(config, rng, shrink), config, rng)


def generate_phantoms(config: PhantomConfig, n_normal: int, n_abnormal: int,
                      seed: int, subject_prefix: str = "") -> list[Frame]:
    """Render ``n_normal`` normal and ``n_abnormal`` abnormal single-frame subjects.

    Deterministic for fixed (config, counts, seed). Each frame gets its own
    subject id, ``{prefix}n####`` or ``{prefix}a####``.
    """
    if n_normal < 0 or n_abnormal < 0:
        raise ValueError("phantom counts must be non-negative")
    rng = np.random.default_rng(seed)
    lo, hi = config.left_chamber_shrink_range
    frames = []
    for i in range(n_normal):
        px = _render_frame(config, rng, None)
        frames.append(Frame(px, f"{subject_prefix}n{i:04d}", 0, Label.NORMAL))
    for i in range(n_abnormal):
        shrink = rng.uniform(lo, hi)
        px = _render_frame(config, rng, shrink)
        frames.append(Frame(px, f"{subject_prefix}a{i:04d}", 0, Label.ABNORMAL))
    return frames


def generate_abnormal_subjects(config: PhantomConfig, n_subjects: int, seed: int,
                               frames_range: tuple[int, int] = (1, 4),
                               subject_prefix: str = "abn") -> dict[str, list[Frame]]:
    """Render abnormal subjects with 1..4 views each for subject-level studies.

    A subject keeps one shrink factor across its frames; each frame gets an
    independent view (rotation, jitter, speckle). Deterministic by seed.
    """
    if n_subjects < 0:
        raise ValueError("n_subjects must be non-negative")
    lo_k, hi_k = frames_range
    if not (1 <= lo_k <= hi_k <= 4):
        raise ValueError("frames_range must lie within 1..4")
    rng = np.random.default_rng(seed)
    s_lo, s_hi = config.left_chamber_shrink_range
    subjects: dict[str, list[Frame]] = {}
    for i in range(n_subjects):
        sid = f"{subject_prefix}{i:04d}"
        shrink = rng.uniform(s_lo, s_hi)
        k = int(rng.integers(lo_k, hi_k + 1))
        subjects[sid] = [
            Frame(_render_frame(config, rng, shrink), sid, j, Label.ABNORMAL)
            for j in range(k)
        ]
    return subjects
