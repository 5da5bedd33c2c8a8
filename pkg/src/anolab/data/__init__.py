from .datasets import Dataset2Mode, make_dataset1, make_dataset2
from .frames import STANDARD_SIZE, DatasetSplit, Frame, Label
from .io import export_frames, load_image_folder, load_manifest, save_frame_png
from .phantom import (
    PhantomConfig,
    generate_abnormal_subjects,
    generate_phantoms,
    left_chamber_template_area,
)
from .preprocess import bilinear_resize, preprocess

__all__ = [
    "STANDARD_SIZE",
    "Dataset2Mode",
    "DatasetSplit",
    "Frame",
    "Label",
    "PhantomConfig",
    "bilinear_resize",
    "export_frames",
    "generate_abnormal_subjects",
    "generate_phantoms",
    "left_chamber_template_area",
    "load_image_folder",
    "load_manifest",
    "make_dataset1",
    "make_dataset2",
    "preprocess",
    "save_frame_png",
]
