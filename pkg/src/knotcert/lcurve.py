"""Curve-side models: maximal-nest presentations and oval extraction.

Two very different kinds of object live here on purpose, because they
feed the same certification pipeline:

* combinatorics of a maximal nest of ovals (degree d, one annular
  membrane, a set of punctured complement regions) compiled into a
  two-generator group presentation via the hemisphere relation rule;

* numerical extraction of the oval pair of the perturbed
  four-branch-singularity model (x^2+y^2-4e)(x^2+2y^2-e) = delta by
  grid sign sampling with linear interpolation (marching squares),
  followed by an exact ray-cast containment order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fpgroups import Presentation, Word


class InvalidConfig(ValueError):
    """Nest configuration violates the degree/membrane/puncture rules."""


class DegenerateLevelSet(RuntimeError):
    """The zero set hits grid nodes exactly even after retries."""


class ResolutionTooCoarse(RuntimeError):
    """Grid resolution below the supported minimum."""


MIN_RESOLUTION = 64
DELTA_RATIO = 100  # require delta <= epsilon^2 / DELTA_RATIO


# -- nest combinatorics ------------------------------------------------


@dataclass(frozen=True)
class NestConfig:
    """A maximal nest of ovals with one membrane annulus.

    Degree d gives k = d // 2 nested ovals and k + 1 complement regions,
    indexed 0 (inner disk) through k (outer region); regions 1..k-1 are
    annuli and are the legal membrane choices.  d = 2, 3 leave no valid
    membrane and are rejected.
    """

    degree: int
    membrane_index: int
    punctured: frozenset[int]

    def __init__(self, degree: int, membrane_index: int = 1, punctured=()):
        k = degree // 2
        if degree < 2:
            raise InvalidConfig(f"degree must be >= 2, got {degree}")
        if k - 1 < 1:
            raise InvalidConfig(f"degree {degree} has no annular region to use as membrane")
        if not 1 <= membrane_index <= k - 1:
            raise InvalidConfig(
                f"membrane index {membrane_index} outside [1, {k - 1}] for degree {degree}"
            )
        punct = frozenset(int(i) for i in punctured)
        if membrane_index in punct:
            raise InvalidConfig(f"membrane region {membrane_index} cannot be punctured")
        bad = [i for i in punct if not 0 <= i <= k]
        if bad:
            raise InvalidConfig(f"punctured regions {sorted(bad)} outside 0..{k}")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "membrane_index", membrane_index)
        object.__setattr__(self, "punctured", punct)

    @property
    def oval_count(self) -> int:
        return self.degree // 2

    @classmethod
    def max_punctured(cls, degree: int, membrane_index: int = 1) -> "NestConfig":
        """Puncture every region except the membrane."""
        k = degree // 2
        if k - 1 < 1 or not 1 <= membrane_index <= k - 1:
            raise InvalidConfig(
                f"degree {degree} with membrane {membrane_index} is not a valid nest"
            )
        punct = frozenset(range(k + 1)) - {membrane_index}
        return cls(degree, membrane_index, punct)


def _power_word(gen: int, exp: int) -> Word:
    return Word.from_syllables([(gen, exp)] if exp else [])


def hemisphere_relation(d: int, i: int) -> tuple[Word, ...]:
    """Relator pair (a^i b^(d-i), a^(d-i) b^i) from puncturing region i.

    A puncture cuts the base circle into hemispheres holding i vertices
    of one lifted-graph component and d-i of the other, one relator per
    hemisphere.  For i = d - i the two coincide and a single relator is
    returned.
    """
    if not 0 <= i <= d:
        raise InvalidConfig(f"region index {i} outside 0..{d}")
    first = _power_word(0, i) * _power_word(1, d - i)
    second = _power_word(0, d - i) * _power_word(1, i)
    if first == second:
        return (first,)
    return (first, second)


@dataclass(frozen=True)
class GeneticNestModel:
    """Vertex bookkeeping for the lifted line arrangement of a nest.

    The 2d lifted vertices split into two components of d vertices each,
    separated by a great circle; a puncture at region i cuts off a
    hemisphere holding i vertices of one component and d - i of the
    other, which is exactly where hemisphere_relation comes from.
    """

    degree: int

    def __post_init__(self):
        if self.degree < 2:
            raise InvalidConfig(f"degree must be >= 2, got {self.degree}")

    @property
    def component_sizes(self) -> tuple[int, int]:
        return (self.degree, self.degree)

    def hemisphere_split(self, i: int) -> tuple[tuple[int, int], tuple[int, int]]:
        """Per-hemisphere (component a, component b) vertex counts."""
        if not 0 <= i <= self.degree:
            raise InvalidConfig(f"region index {i} outside 0..{self.degree}")
        return ((i, self.degree - i), (self.degree - i, i))

    def relators_for_puncture(self, i: int) -> tuple[Word, ...]:
        return hemisphere_relation(self.degree, i)


def nest_presentation(config: NestConfig) -> Presentation:
    """<a, b | a^d b^d, and a^(d-i) b^i, b^(d-i) a^i for each punctured i>."""
    d = config.degree
    relators: list[Word] = [_power_word(0, d) * _power_word(1, d)]
    for i in sorted(config.punctured):
        first = _power_word(0, d - i) * _power_word(1, i)
        second = _power_word(1, d - i) * _power_word(0, i)
        relators.append(first)
        if second != first:
            relators.append(second)
    return Presentation(2, tuple(relators))


def nori_abelian_guaranteed(self_intersection: int, singularity_types: list[str]) -> bool:
    """Sufficient condition for an abelian complement after degeneration.

    True iff the degeneration's only singularity is the four-branch
    X9 point and the self-intersection strictly exceeds 16.
    """
    return list(singularity_types) == ["X9"] and self_intersection > 16


# -- oval extraction ---------------------------------------------------


def perturbed_quartic_field(x, y, epsilon: float, delta: float):
    """(x^2 + y^2 - 4eps)(x^2 + 2y^2 - eps) - delta; scalar or ndarray."""
    return (x * x + y * y - 4.0 * epsilon) * (x * x + 2.0 * y * y - epsilon) - delta


@dataclass(frozen=True)
class OvalReport:
    """Closed level-set components of the perturbed-singularity model.

    components are closed polylines (first point not repeated); nesting
    lists, per component, the components strictly containing it.  The
    delta threshold actually enforced is recorded so certificates are
    self-describing.
    """

    epsilon: float
    delta: float
    delta_threshold: float
    resolution: int
    window: tuple[float, float, float, float]
    components: tuple[tuple[tuple[float, float], ...], ...]
    nesting: tuple[tuple[int, ...], ...]
    open_chains: int
    grid_retries: int

    @property
    def component_count(self) -> int:
        return len(self.components)

    def nested_pair(self) -> bool:
        """Exactly two closed ovals, one strictly inside the other."""
        if len(self.components) != 2:
            return False
        return self.nesting[0] == (1,) or self.nesting[1] == (0,)

    def to_json_dict(self, include_chains: bool = True) -> dict:
        out: dict = {
            "epsilon": self.epsilon,
            "delta": self.delta,
            "delta_threshold": self.delta_threshold,
            "resolution": self.resolution,
            "window": list(self.window),
            "component_count": self.component_count,
            "component_sizes": [len(c) for c in self.components],
            "nesting": [list(n) for n in self.nesting],
            "open_chains": self.open_chains,
            "grid_retries": self.grid_retries,
            "nested_pair": self.nested_pair(),
        }
        if include_chains:
            out["components"] = [
                [[float(x), float(y)] for x, y in chain] for chain in self.components
            ]
        return out


def default_window(epsilon: float) -> tuple[float, float, float, float]:
    """Square window comfortably containing both model ellipses."""
    half = 3.0 * math.sqrt(epsilon)
    return (-half, half, -half, half)


def x9_ovals(
    epsilon: float,
    delta: float,
    window: tuple[float, float, float, float] | None = None,
    resolution: int = 512,
    max_retries: int = 3,
) -> OvalReport:
    """Extract the zero set of the perturbed model on a grid.

    Grid sign sampling with linear interpolation along cell edges;
    segments are chained into closed components and ordered by enclosed
    area (outermost first).  Chains that leave the window are counted as
    open_chains and excluded from the components.

    A grid node evaluating exactly to zero triggers a deterministic
    sub-cell shift of the grid and a retry; DegenerateLevelSet is raised
    only when max_retries shifts all fail.
    """
    if epsilon <= 0:
        raise ValueError("epsilon must be positive")
    if delta <= 0:
        raise ValueError("delta must be positive (the unperturbed level set is excluded)")
    threshold = epsilon * epsilon / DELTA_RATIO
    if delta > threshold:
        raise ValueError(
            f"delta {delta} exceeds the documented threshold epsilon^2/{DELTA_RATIO} = {threshold}"
        )
    if resolution < MIN_RESOLUTION:
        raise ResolutionTooCoarse(
            f"resolution {resolution} below the supported minimum {MIN_RESOLUTION}"
        )
    if window is None:
        window = default_window(epsilon)
    xmin, xmax, ymin, ymax = window
    if not (xmin < xmax and ymin < ymax):
        raise ValueError(f"malformed window {window}")

    cell_x = (xmax - xmin) / resolution
    cell_y = (ymax - ymin) / resolution
    for attempt in range(max_retries + 1):
        # deterministic incommensurate shifts keep retries reproducible
        ox = attempt * 7.3e-4 * cell_x
        oy = attempt * 3.1e-4 * cell_y
        xs = np.linspace(xmin + ox, xmax + ox, resolution + 1)
        ys = np.linspace(ymin + oy, ymax + oy, resolution + 1)
        grid_x, grid_y = np.meshgrid(xs, ys, indexing="ij")
        values = perturbed_quartic_field(grid_x, grid_y, epsilon, delta)
        if not np.any(values == 0.0):
            return _extract_report(
                xs, ys, values, epsilon, delta, threshold, resolution, window, attempt
            )
    raise DegenerateLevelSet(
        f"zero set touches grid nodes exactly after {max_retries} grid shifts"
    )


# marching-squares case table: for each corner-sign case, the cell edges
# (0 bottom, 1 right, 2 top, 3 left) joined by each emitted segment.
# Corner bit k set = corner k positive; corners 0..3 = (i,j), (i+1,j),
# (i+1,j+1), (i,j+1).  Cases 5 and 10 are ambiguous saddles, resolved by
# the sign at the cell center.
_CASE_SEGMENTS: dict[int, tuple[tuple[int, int], ...]] = {
    0: (),
    1: ((3, 0),),
    2: ((0, 1),),
    3: ((3, 1),),
    4: ((1, 2),),
    6: ((0, 2),),
    7: ((3, 2),),
    8: ((2, 3),),
    9: ((2, 0),),
    11: ((2, 1),),
    12: ((1, 3),),
    13: ((1, 0),),
    14: ((0, 3),),
    15: (),
}


def _extract_report(
    xs, ys, values, epsilon, delta, threshold, resolution, window, retries
) -> OvalReport:
    positive = values > 0.0

    # cell case indices, vectorized; only mixed-sign cells produce segments
    c0 = positive[:-1, :-1]
    c1 = positive[1:, :-1]
    c2 = positive[1:, 1:]
    c3 = positive[:-1, 1:]
    case = (
        c0.astype(np.uint8)
        + 2 * c1.astype(np.uint8)
        + 4 * c2.astype(np.uint8)
        + 8 * c3.astype(np.uint8)
    )
    mixed = (case != 0) & (case != 15)
    cells = np.argwhere(mixed)

    def edge_key(i: int, j: int, edge: int):
        # edges keyed by their grid endpoints: horizontal ("h") edge at
        # node (i, j) runs to (i+1, j); vertical ("v") to (i, j+1)
        if edge == 0:
            return (i, j, "h")
        if edge == 1:
            return (i + 1, j, "v")
        if edge == 2:
            return (i, j + 1, "h")
        return (i, j, "v")

    segments: list[tuple[tuple, tuple]] = []
    for i, j in cells:
        i, j = int(i), int(j)
        idx = int(case[i, j])
        if idx in (5, 10):
            cx = 0.5 * (xs[i] + xs[i + 1])
            cy = 0.5 * (ys[j] + ys[j + 1])
            center_positive = perturbed_quartic_field(cx, cy, epsilon, delta) > 0.0
            if idx == 5:
                pairs = ((3, 2), (1, 0)) if center_positive else ((3, 0), (1, 2))
            else:
                pairs = ((0, 3), (2, 1)) if center_positive else ((0, 1), (2, 3))
        else:
            pairs = _CASE_SEGMENTS[idx]
        for ea, eb in pairs:
            segments.append((edge_key(i, j, ea), edge_key(i, j, eb)))

    # interpolated crossing point on each used edge
    def edge_point(key) -> tuple[float, float]:
        i, j, kind = key
        va = float(values[i, j])
        if kind == "h":
            vb = float(values[i + 1, j])
            t = va / (va - vb)
            return (float(xs[i]) + t * (float(xs[i + 1]) - float(xs[i])), float(ys[j]))
        vb = float(values[i, j + 1])
        t = va / (va - vb)
        return (float(xs[i]), float(ys[j]) + t * (float(ys[j + 1]) - float(ys[j])))

    adjacency: dict[tuple, list[tuple]] = {}
    for a, b in segments:
        adjacency.setdefault(a, []).append(b)
        adjacency.setdefault(b, []).append(a)

    for key, nbrs in adjacency.items():
        if len(nbrs) > 2:
            raise ResolutionTooCoarse(
                f"edge {key} used by {len(nbrs)} segments; grid cannot separate branches"
            )

    closed: list[list[tuple]] = []
    open_chains = 0
    visited: set[tuple] = set()
    for start in sorted(adjacency):
        if start in visited:
            continue
        # walk to one end (or all the way around)
        chain = [start]
        visited.add(start)
        grew = True
        while grew:
            grew = False
            for nxt in adjacency[chain[-1]]:
                if nxt not in visited:
                    chain.append(nxt)
                    visited.add(nxt)
                    grew = True
                    break
        if chain[0] in adjacency[chain[-1]] and len(chain) > 2:
            closed.append(chain)
        else:
            # extend from the other end; still open means the curve
            # leaves the window
            grew = True
            while grew:
                grew = False
                for nxt in adjacency[chain[0]]:
                    if nxt not in visited:
                        chain.insert(0, nxt)
                        visited.add(nxt)
                        grew = True
                        break
            if chain[0] in adjacency[chain[-1]] and len(chain) > 2:
                closed.append(chain)
            else:
                open_chains += 1

    polylines = [tuple(edge_point(k) for k in chain) for chain in closed]
    polylines.sort(key=lambda poly: (-abs(_shoelace(poly)), poly))
    nesting = tuple(
        tuple(
            j
            for j, outer in enumerate(polylines)
            if j != i and _point_in_polygon(polylines[i][0], outer)
        )
        for i in range(len(polylines))
    )
    return OvalReport(
        epsilon=epsilon,
        delta=delta,
        delta_threshold=threshold,
        resolution=resolution,
        window=tuple(window),
        components=tuple(polylines),
        nesting=nesting,
        open_chains=open_chains,
        grid_retries=retries,
    )


def _shoelace(poly) -> float:
    area = 0.0
    n = len(poly)
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        area += x1 * y2 - x2 * y1
    return 0.5 * area


def _point_in_polygon(point, poly) -> bool:
    """Even-odd ray cast along +x with a half-open vertical rule."""
    px, py = point
    inside = False
    n = len(poly)
    for i in range(n):
        x1, y1 = poly[i]
        x2, y2 = poly[(i + 1) % n]
        if (y1 > py) != (y2 > py):
            x_cross = x1 + (py - y1) * (x2 - x1) / (y2 - y1)
            if x_cross > px:
                inside = not inside
    return inside


def oval_svg(report: OvalReport) -> str:
    """Plot artifact: the extracted curves as an SVG document."""
    xmin, xmax, ymin, ymax = report.window
    width = xmax - xmin
    height = ymax - ymin
    palette = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd")
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{xmin} {ymin} {width} {height}">',
        f'<rect x="{xmin}" y="{ymin}" width="{width}" height="{height}" fill="white"/>',
    ]
    stroke = max(width, height) / 300.0
    for idx, chain in enumerate(report.components):
        points = " ".join(f"{x},{y}" for x, y in chain)
        color = palette[idx % len(palette)]
        lines.append(
            f'<polygon points="{points}" fill="none" stroke="{color}" stroke-width="{stroke}"/>'
        )
    lines.append("</svg>")
    return "\n".join(lines)
