"""Access to the bundled polytope descriptions.

Four datasets ship with the package, all full-dimensional and irredundant:

* ``m4``  -- 4-dimensional polytope with 8 facets, an anti-blocking spindle
             whose graph has 20 vertices and 40 edges.
* ``s48`` -- 5-dimensional spindle with 48 facets (two symmetric blocks of
             24, labels ``1+`` ... ``24-``).
* ``s28`` -- 5-dimensional spindle with 28 facets (labels ``1+`` ... ``14-``).
* ``s25`` -- 5-dimensional spindle with 25 facets (labels ``1`` ... ``25``).
"""

from __future__ import annotations

from importlib import resources
from pathlib import Path

from .hrep import HRep, parse_hrep

BUNDLED = ("m4", "s48", "s28", "s25")


def bundled_text(name: str) -> str:
    base = name[:-len(".hrep")] if name.endswith(".hrep") else name
    if base not in BUNDLED:
        raise KeyError(f"no bundled dataset {name!r}; options: {', '.join(BUNDLED)}")
    return resources.files("circuitwalks.data").joinpath(f"{base}.hrep").read_text()


def load(name: str) -> HRep:
    """Load a bundled dataset by name, or any path to an H-format file."""
    p = Path(name)
    if p.is_file():
        return parse_hrep(p.read_text())
    return parse_hrep(bundled_text(name))
