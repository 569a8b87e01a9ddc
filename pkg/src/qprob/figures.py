"""Deterministic SVG rendering of triangle pictures and their squares.

Output bytes depend only on the input pictures: fixed-precision coordinate
formatting, no timestamps, no randomness.
"""

from __future__ import annotations

import numpy as np

from .suprematism_geometry import REFERENCE_CORNERS, TrianglePicture

_SCALE = 220.0
_MARGIN = 0.18
_PANEL_GAP = 0.6
_SQUARE_FILLS = ("#111111", "#c8102e", "#fafafa")
_REF_CENTROID = REFERENCE_CORNERS.mean(axis=0)


def _fmt(value: float) -> str:
    return f"{value:.6f}"


def _square_corners(p: np.ndarray, q: np.ndarray, centroid: np.ndarray) -> np.ndarray | None:
    chord = q - p
    length = float(np.linalg.norm(chord))
    if length < 1e-12:
        return None
    normal = np.array([chord[1], -chord[0]]) / length
    mid = 0.5 * (p + q)
    side = float(normal @ (mid - centroid))
    if abs(side) < 1e-12:
        # degenerate (collinear) inner triangle: orient away from the reference centroid
        side = float(normal @ (mid - _REF_CENTROID))
    if side < 0.0:
        normal = -normal
    return np.array([p, q, q + length * normal, p + length * normal])


def _panel_shapes(pic: TrianglePicture, with_squares: bool) -> list[tuple[str, np.ndarray, dict]]:
    shapes: list[tuple[str, np.ndarray, dict]] = []
    if with_squares:
        centroid = pic.vertices.mean(axis=0)
        for k in range(3):
            corners = _square_corners(pic.vertices[k], pic.vertices[(k + 1) % 3], centroid)
            if corners is not None:
                shapes.append(("polygon", corners, {
                    "fill": _SQUARE_FILLS[k], "stroke": "#111111", "stroke-width": "1",
                }))
    shapes.append(("polygon", REFERENCE_CORNERS.copy(), {
        "fill": "none", "stroke": "#999999", "stroke-width": "1.5",
    }))
    shapes.append(("polygon", pic.vertices.copy(), {
        "fill": "none", "stroke": "#1f4e8c", "stroke-width": "2",
    }))
    for k in range(3):
        shapes.append(("circle", pic.vertices[k].reshape(1, 2), {"r": "3.5", "fill": "#1f4e8c"}))
    return shapes


def render_svg(pics, with_squares: bool = False) -> str:
    """One SVG document with the given pictures laid out side by side."""
    all_shapes: list[tuple[str, np.ndarray, dict]] = []
    cursor = 0.0
    for pic in pics:
        shapes = _panel_shapes(pic, with_squares)
        points = np.vstack([shape[1] for shape in shapes])
        shift = np.array([cursor - float(points[:, 0].min()), 0.0])
        all_shapes.extend((kind, pts + shift, attrs) for kind, pts, attrs in shapes)
        cursor += float(points[:, 0].max() - points[:, 0].min()) + _PANEL_GAP

    points = np.vstack([shape[1] for shape in all_shapes])
    xmin, ymin = points.min(axis=0) - _MARGIN
    xmax, ymax = points.max(axis=0) + _MARGIN
    width = (xmax - xmin) * _SCALE
    height = (ymax - ymin) * _SCALE

    def to_px(pt: np.ndarray) -> tuple[float, float]:
        # SVG y grows downward; flip the geometry's y axis
        return (float(pt[0]) - xmin) * _SCALE, (ymax - float(pt[1])) * _SCALE

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(width)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(width)} {_fmt(height)}">',
        f'<rect width="{_fmt(width)}" height="{_fmt(height)}" fill="#ffffff"/>',
    ]
    for kind, pts, attrs in all_shapes:
        attr_text = " ".join(f'{key}="{value}"' for key, value in attrs.items())
        if kind == "polygon":
            coords = " ".join(f"{_fmt(px)},{_fmt(py)}" for px, py in (to_px(pt) for pt in pts))
            parts.append(f'<polygon points="{coords}" {attr_text}/>')
        else:
            cx, cy = to_px(pts[0])
            parts.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" {attr_text}/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
