"""Shared bits for the demo scripts: output directory and simple
visualization encoders (no plotting dependency, just PNGs)."""

from pathlib import Path

import numpy as np

from satforge import formats

OUT = Path(__file__).parent / "out"


def outdir(name: str) -> Path:
    d = OUT / name
    d.mkdir(parents=True, exist_ok=True)
    return d


def save_gray_png(path, values, lo=None, hi=None):
    """Normalize a float map (inf/NaN -> black) into an 8-bit PNG."""
    v = np.asarray(values, dtype=np.float64)
    finite = np.isfinite(v)
    if lo is None:
        lo = v[finite].min() if finite.any() else 0.0
    if hi is None:
        hi = v[finite].max() if finite.any() else 1.0
    span = (hi - lo) or 1.0
    img = np.zeros(v.shape, dtype=np.uint8)
    img[finite] = np.clip((v[finite] - lo) / span * 255.0, 0, 255).astype(np.uint8)
    formats.write_png(path, img)


def save_rgb_png(path, linear_rgb):
    """Gamma-encode a linear-light float image to PNG."""
    from satforge import encode_8bit

    formats.write_png(path, encode_8bit(linear_rgb))


def save_coords_png(path, dense):
    """Dense model-frame coordinates as a normalized RGB map."""
    d = np.asarray(dense, dtype=np.float64)
    finite = np.isfinite(d).all(axis=2)
    img = np.zeros(d.shape[:2] + (3,), dtype=np.uint8)
    if finite.any():
        vals = d[finite]
        lo, hi = vals.min(axis=0), vals.max(axis=0)
        span = np.where(hi > lo, hi - lo, 1.0)
        img[finite] = np.clip((vals - lo) / span * 255.0, 0, 255).astype(np.uint8)
    formats.write_png(path, img)
