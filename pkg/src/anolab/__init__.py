"""One-class anomaly detection laboratory.

Trains generative-adversarial models on normal images only and flags
anomalies through reconstruction, discriminator and attention-weighted
residual scores, with a statistical evaluation harness (ROC / Youden /
DeLong) and a synthetic cardiac phantom dataset.
"""

__version__ = "0.1.0"
