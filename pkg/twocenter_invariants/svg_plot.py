"""
SVG rendering of traced orbits.

The bounding ellipse λ = λ_max is fitted into an 800×600 viewBox with a 5%
margin; the orbit, the primaries E and M and any collision markers are drawn
on top.
"""

import xml.etree.ElementTree as ET
from pathlib import Path
from typing import Optional, Sequence, Tuple, Union

import numpy as np

from twocenter_invariants.numerics.topology.curve import ClosedCurve
from twocenter_invariants.numerics.types import TorusData

SVG_NS = "http://www.w3.org/2000/svg"
VIEW_WIDTH = 800
VIEW_HEIGHT = 600
MARGIN = 0.05
ARROW_COUNT = 8
ARROW_SIZE = 9.0

_STYLE = {
    "orbit": {"fill": "none", "stroke": "#1f4e9c", "stroke-width": "1.2"},
    "ellipse": {"fill": "none", "stroke": "#888888", "stroke-width": "1", "stroke-dasharray": "6 4"},
    "primary": {"fill": "#000000"},
    "collision": {"fill": "none", "stroke": "#c0392b", "stroke-width": "1.5"},
    "arrow": {"fill": "#1f4e9c"},
}


class _Frame:
    """Maps the q-plane onto the viewBox with q₂ pointing up."""

    def __init__(self, half_width: float, half_height: float):
        usable_w = (1.0 - 2.0 * MARGIN) * VIEW_WIDTH
        usable_h = (1.0 - 2.0 * MARGIN) * VIEW_HEIGHT
        self.scale = min(usable_w / (2.0 * half_width), usable_h / (2.0 * half_height))

    def __call__(self, z) -> Tuple[np.ndarray, np.ndarray]:
        z = np.asarray(z, dtype=complex)
        return VIEW_WIDTH / 2.0 + self.scale * z.real, VIEW_HEIGHT / 2.0 - self.scale * z.imag


def _fmt(value: float) -> str:
    return f"{value:.3f}"


def svgroot() -> ET.Element:
    return ET.Element("svg", xmlns=SVG_NS, version="1.1",
                      width=f"{VIEW_WIDTH}px", height=f"{VIEW_HEIGHT}px",
                      viewBox=f"0 0 {VIEW_WIDTH} {VIEW_HEIGHT}")


def svglineloop(parent: ET.Element, x: np.ndarray, y: np.ndarray, **attrs) -> ET.Element:
    d = "M" + "L".join(f"{_fmt(a)} {_fmt(b)}" for a, b in zip(x, y)) + "z"
    return ET.SubElement(parent, "path", d=d, **attrs)


def _arrows(parent: ET.Element, frame: _Frame, curve: ClosedCurve, count: int) -> None:
    z = curve.z
    n = len(z)
    for i in (np.arange(count) * n) // count:
        head = z[(i + 1) % n]
        direction = head - z[i]
        if abs(direction) == 0.0:
            continue
        direction /= abs(direction)
        x, y = frame(head)
        # Screen coordinates flip q₂
        ux, uy = direction.real, -direction.imag
        size = ARROW_SIZE
        tip = (float(x), float(y))
        left = (tip[0] - size * ux - 0.5 * size * uy, tip[1] - size * uy + 0.5 * size * ux)
        right = (tip[0] - size * ux + 0.5 * size * uy, tip[1] - size * uy - 0.5 * size * ux)
        d = "M{} {}L{} {}L{} {}z".format(*(_fmt(v) for v in (*tip, *left, *right)))
        ET.SubElement(parent, "path", d=d, **_STYLE["arrow"])


def render_orbit_svg(torus: TorusData, curve: ClosedCurve, arrows: bool = False,
                     markers: Optional[Sequence[int]] = None) -> ET.Element:
    """
    Build the SVG element of an orbit.

    Args:
        torus: Supplies λ_max and the primaries
        curve: The traced orbit
        arrows: Draw orientation arrows along the orbit
        markers: Sample indices to circle; defaults to the curve's collision markers
    """
    a = float(np.cosh(torus.lambda_max))
    b = float(np.sinh(torus.lambda_max))
    frame = _Frame(a, max(b, 1e-3 * a))
    root = svgroot()
    ET.SubElement(root, "title").text = f"T_{{{torus.k},{torus.l}}} orbit, mu={torus.params.mu:g}, c={torus.params.c:g}"

    cx, cy = frame(0j)
    ET.SubElement(root, "ellipse", cx=_fmt(float(cx)), cy=_fmt(float(cy)),
                  rx=_fmt(frame.scale * a), ry=_fmt(frame.scale * b), **_STYLE["ellipse"])

    group = ET.SubElement(root, "g", id="orbit")
    x, y = frame(curve.z)
    svglineloop(group, x, y, **_STYLE["orbit"])
    if arrows:
        _arrows(group, frame, curve, ARROW_COUNT)

    for name, position in (("E", torus.params.e_complex), ("M", torus.params.m_complex)):
        px, py = frame(position)
        ET.SubElement(root, "circle", cx=_fmt(float(px)), cy=_fmt(float(py)), r="4",
                      id=f"primary-{name}", **_STYLE["primary"])
        label = ET.SubElement(root, "text", x=_fmt(float(px)), y=_fmt(float(py) + 18.0),
                              **{"text-anchor": "middle", "font-size": "14"})
        label.text = name

    chosen = curve.markers if markers is None else tuple(markers)
    for index in chosen:
        mx, my = frame(curve.z[index])
        ET.SubElement(root, "circle", cx=_fmt(float(mx)), cy=_fmt(float(my)), r="7",
                      **{"class": "collision"}, **_STYLE["collision"])
    return root


def write_svg(svg: ET.Element, path: Union[str, Path]) -> Path:
    """Write the given SVG element to the named file."""
    path = Path(path)
    ET.ElementTree(svg).write(path, encoding="utf-8", xml_declaration=True)
    return path
