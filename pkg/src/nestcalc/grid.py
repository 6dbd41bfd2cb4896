"""Sampling fields on rectangular grids and writing them as CSV.

Field selectors:

* a builtin name (``fig1`` is ``x1 / (x1^2 + x2^2)``, ``inverse_radius`` is ``1/|x|``);
* a monomial triple ``"k,m,n"`` meaning ``x1^k x_p^m x^n`` in 3D;
* a path to a solution JSON file (cylindrical or spherical).

Cells where the field is singular are written empty.
"""

from __future__ import annotations

import csv
import io
import itertools
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterator

from . import jets
from .errors import DomainError
from .harmonics import monomial_cartesian
from .solutions import cartesian_field, load_solution


class GridSpecError(ValueError):
    """Malformed grid specification (maps to a usage error on the CLI)."""


@dataclass(frozen=True)
class Axis:
    lo: float
    hi: float
    count: int

    def __post_init__(self):
        if self.count < 2:
            raise GridSpecError(f"axis count must be >= 2, got {self.count}")
        if not self.lo < self.hi:
            raise GridSpecError(f"axis needs min < max, got {self.lo}:{self.hi}")

    def nodes(self) -> list[float]:
        span = self.hi - self.lo
        return [self.lo + span * i / (self.count - 1) for i in range(self.count)]


def parse_axis(text: str) -> Axis:
    """Parse ``"min:max:count"``."""
    parts = text.split(":")
    if len(parts) != 3:
        raise GridSpecError(f"range {text!r} is not of the form min:max:count")
    try:
        lo, hi = float(parts[0]), float(parts[1])
        count = int(parts[2])
    except ValueError as exc:
        raise GridSpecError(f"range {text!r}: {exc}") from None
    return Axis(lo, hi, count)


def fig1(x1, x2):
    return x1 / (x1 * x1 + x2 * x2)


def inverse_radius(x1, x2, x3):
    return 1 / jets.sqrt(x1 * x1 + x2 * x2 + x3 * x3)


BUILTINS: dict[str, tuple[int, Callable]] = {
    "fig1": (2, fig1),
    "inverse_radius": (3, inverse_radius),
}

_TRIPLE = re.compile(r"^\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*$")


def resolve_field(selector: str) -> tuple[int | None, Callable]:
    """Return ``(dimension, cartesian_field)``; dimension None means 3."""
    if selector in BUILTINS:
        return BUILTINS[selector]
    m = _TRIPLE.match(selector)
    if m:
        return 3, monomial_cartesian(tuple(int(g) for g in m.groups()))
    path = Path(selector)
    if path.suffix == ".json" or path.exists():
        try:
            return 3, cartesian_field(load_solution(path))
        except (OSError, KeyError, ValueError) as exc:
            raise GridSpecError(f"cannot load solution {selector!r}: {exc}") from None
    raise GridSpecError(f"unknown field {selector!r}; expected {sorted(BUILTINS)}, 'k,m,n' or a solution JSON path")


@dataclass(frozen=True)
class GridSpec:
    axes: tuple[Axis, ...]
    field: str

    def __post_init__(self):
        dim, _ = resolve_field(self.field)
        if len(self.axes) != dim:
            raise GridSpecError(f"field {self.field!r} needs {dim} axes, got {len(self.axes)}")


def sample(spec: GridSpec) -> Iterator[tuple[tuple[float, ...], float | None]]:
    """Yield ``(node, value)`` row-major with the last axis fastest; None marks a singular node."""
    _, f = resolve_field(spec.field)
    for node in itertools.product(*(a.nodes() for a in spec.axes)):
        try:
            value = float(f(*node))
        except (DomainError, ZeroDivisionError):
            value = None
        yield node, value


def to_csv(spec: GridSpec) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"x{i + 1}" for i in range(len(spec.axes))] + ["F"])
    for node, value in sample(spec):
        w.writerow([repr(c) for c in node] + ["" if value is None else repr(value)])
    return buf.getvalue()


def write_csv(spec: GridSpec, path: str | Path) -> None:
    Path(path).write_text(to_csv(spec), encoding="ascii")
