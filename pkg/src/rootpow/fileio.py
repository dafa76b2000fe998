"""Image file I/O (8-bit RGB PNG and binary PPM) and the contrast degrader."""

from __future__ import annotations

import io
from pathlib import Path

import numpy as np
from PIL import Image

from .planes import Rgb8, denormalize_plane, normalize_plane

_PNG_SIG = b"\x89PNG\r\n\x1a\n"


def _load_png(data: bytes, path) -> Rgb8:
    # Pillow silently folds 16-bit channels down to 8, so the IHDR fields
    # are checked here before decoding.
    if len(data) < 26 or data[12:16] != b"IHDR":
        raise ValueError(f"corrupt PNG header: {path}")
    bit_depth = data[24]
    color_type = data[25]
    if bit_depth != 8:
        raise ValueError(f"unsupported bit depth {bit_depth} (need 8-bit): {path}")
    if color_type != 2:
        raise ValueError(
            f"unsupported pixel format (need 8-bit RGB without alpha): {path}"
        )
    with Image.open(io.BytesIO(data)) as img:
        arr = np.asarray(img, dtype=np.uint8)
    return Rgb8(arr[:, :, 0], arr[:, :, 1], arr[:, :, 2])


def _load_ppm(data: bytes, path) -> Rgb8:
    pos = 2
    fields: list[int] = []
    while len(fields) < 3:
        while pos < len(data):
            ch = data[pos : pos + 1]
            if ch in b" \t\r\n":
                pos += 1
            elif ch == b"#":
                nl = data.find(b"\n", pos)
                pos = len(data) if nl < 0 else nl + 1
            else:
                break
        start = pos
        while pos < len(data) and data[pos : pos + 1] not in b" \t\r\n#":
            pos += 1
        if start == pos or not data[start:pos].isdigit():
            raise ValueError(f"corrupt PPM header: {path}")
        fields.append(int(data[start:pos]))
    pos += 1  # single whitespace byte separates the header from pixel data
    width, height, maxval = fields
    if width <= 0 or height <= 0:
        raise ValueError(f"corrupt PPM header: {path}")
    if maxval != 255:
        raise ValueError(f"PPM maxval must be 255, got {maxval}: {path}")
    need = width * height * 3
    raw = data[pos : pos + need]
    if len(raw) < need:
        raise ValueError(f"truncated PPM pixel data: {path}")
    arr = np.frombuffer(raw, dtype=np.uint8).reshape(height, width, 3)
    return Rgb8(arr[:, :, 0], arr[:, :, 1], arr[:, :, 2])


def load_image(path) -> Rgb8:
    """Read an 8-bit RGB image from a PNG or binary (P6) PPM file.

    The format is detected from the file's magic bytes, not its name.
    """
    data = Path(path).read_bytes()
    if data.startswith(_PNG_SIG):
        return _load_png(data, path)
    if data.startswith(b"P6"):
        return _load_ppm(data, path)
    raise ValueError(f"unsupported image format (expected PNG or binary PPM): {path}")


def save_image(img: Rgb8, path) -> None:
    """Write an 8-bit RGB image; the extension picks PNG or binary PPM."""
    path = Path(path)
    stacked = np.stack(img.planes(), axis=-1)
    suffix = path.suffix.lower()
    if suffix == ".png":
        Image.fromarray(stacked, mode="RGB").save(path, format="PNG")
    elif suffix in (".ppm", ".pnm"):
        header = f"P6\n{img.width} {img.height}\n255\n".encode("ascii")
        path.write_bytes(header + stacked.tobytes())
    else:
        raise ValueError(f"unsupported output extension {path.suffix!r} (use .png or .ppm)")


def degrade(img: Rgb8, gain: float = 0.4, bias: float = 0.3, gamma: float = 1.0) -> Rgb8:
    """Manufacture a low-contrast twin: x -> clamp(bias + gain * x**gamma).

    Applied per channel on the unit interval, then requantized.  The
    defaults compress the full range into [0.3, 0.7].
    """
    if gain <= 0.0:
        raise ValueError(f"gain must be positive, got {gain}")
    out = []
    for p8 in img.planes():
        x = normalize_plane(p8)
        with np.errstate(divide="ignore"):
            y = bias + gain * np.power(x, gamma)
        out.append(denormalize_plane(np.clip(y, 0.0, 1.0)))
    return Rgb8(*out)
