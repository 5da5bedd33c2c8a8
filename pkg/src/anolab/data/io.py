"""Image-folder loading, PNG export and JSON manifests.

Expected folder layout::

    root/
      normal/      img0.png [or per-subject subfolders of images]
      abnormal/    subj01/view0.png ...

Labels come from the first-level directory name; a second directory level,
when present, names the subject. Flat images are one-subject-one-frame.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
from PIL import Image

from .frames import Frame, Label
from .preprocess import preprocess

_IMAGE_SUFFIXES = {".png", ".jpg", ".jpeg", ".bmp", ".tif", ".tiff"}


def load_image(path: str | Path) -> np.ndarray:
    """Read an image as grayscale float array in its native 0..255 range."""
    with Image.open(path) as im:
        return np.asarray(im.convert("L"), dtype=np.float64)


def load_image_folder(root: str | Path, size: int = 64) -> list[Frame]:
    """Load and preprocess a labelled image folder into frames."""
    root = Path(root)
    frames: list[Frame] = []
    for label in (Label.NORMAL, Label.ABNORMAL):
        class_dir = root / label.value
        if not class_dir.is_dir():
            continue
        flat = sorted(p for p in class_dir.iterdir()
                      if p.suffix.lower() in _IMAGE_SUFFIXES)
        for i, path in enumerate(flat):
            px = preprocess(load_image(path), (0.0, 255.0), size=size)
            frames.append(Frame(px, f"{label.value}-{path.stem}", 0, label))
        for subj_dir in sorted(p for p in class_dir.iterdir() if p.is_dir()):
            views = sorted(p for p in subj_dir.iterdir()
                           if p.suffix.lower() in _IMAGE_SUFFIXES)
            for j, path in enumerate(views):
                px = preprocess(load_image(path), (0.0, 255.0), size=size)
                frames.append(Frame(px, subj_dir.name, j, label))
    if not frames:
        raise ValueError(f"no images found under {root} (expected normal/ and abnormal/)")
    return frames


def save_frame_png(frame: Frame, path: str | Path) -> None:
    """Write a frame as an 8-bit grayscale PNG."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    arr = np.round(np.asarray(frame.pixels) * 255.0).astype(np.uint8)
    Image.fromarray(arr, mode="L").save(path)


def export_frames(frames: list[Frame], out_dir: str | Path,
                  manifest_name: str = "manifest.json") -> Path:
    """Export frames as PNGs under label subfolders plus a JSON manifest."""
    out_dir = Path(out_dir)
    entries = []
    for fr in frames:
        rel = Path(fr.label.value) / f"{fr.subject_id}_{fr.frame_index:02d}.png"
        save_frame_png(fr, out_dir / rel)
        entries.append({
            "subject_id": fr.subject_id,
            "frame_index": fr.frame_index,
            "label": fr.label.value,
            "path": str(rel),
        })
    manifest = out_dir / manifest_name
    manifest.write_text(json.dumps(entries, indent=2, sort_keys=True))
    return manifest


def load_manifest(manifest_path: str | Path, size: int = 64) -> list[Frame]:
    """Rebuild frames from a manifest written by :func:`export_frames`."""
    manifest_path = Path(manifest_path)
    root = manifest_path.parent
    frames = []
    for entry in json.loads(manifest_path.read_text()):
        px = preprocess(load_image(root / entry["path"]), (0.0, 255.0), size=size)
        frames.append(Frame(px, entry["subject_id"], int(entry["frame_index"]),
                            Label(entry["label"])))
    return frames
