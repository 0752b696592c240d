"""Core polyhedral model: points, rigid transforms, facets, volumes, supervolumes.

Everything is immutable after construction.  Lengths are millimeters
throughout.  Facets are planar polygons (possibly non-convex) wound
counter-clockwise when seen from outside the owning volume, so solid edges
stay true mesh edges for the edge-highlighting renderer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidDimensionError, InvalidGeometryError

# Scale-relative tolerances: planarity and point coincidence are measured
# against the bounding-box diagonal so mm-scale chambers survive inside
# 20 m detectors.
EPS_PLANE_REL = 1e-6
EPS_GEOM_REL = 1e-9

DEFAULT_RGB = (0.7, 0.7, 0.7)


@dataclass(frozen=True)
class Point3:
    """A point (or displacement) in the world frame, millimeters."""

    x: float
    y: float
    z: float

    def __post_init__(self):
        for c in (self.x, self.y, self.z):
            if not math.isfinite(c):
                raise InvalidGeometryError(f"non-finite coordinate in {(self.x, self.y, self.z)}")

    @classmethod
    def from_array(cls, a) -> "Point3":
        a = np.asarray(a, dtype=float).reshape(3)
        return cls(float(a[0]), float(a[1]), float(a[2]))

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z], dtype=float)

    def __add__(self, other: "Point3") -> "Point3":
        return Point3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Point3") -> "Point3":
        return Point3(self.x - other.x, self.y - other.y, self.z - other.z)

    def __mul__(self, s: float) -> "Point3":
        return Point3(self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__

    def dot(self, other: "Point3") -> float:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other: "Point3") -> "Point3":
        return Point3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm(self) -> float:
        return math.sqrt(self.dot(self))


ORIGIN = Point3(0.0, 0.0, 0.0)


def _as_matrix(rotation) -> np.ndarray:
    m = np.asarray(rotation, dtype=float)
    if m.shape != (3, 3):
        raise InvalidGeometryError(f"rotation must be 3x3, got shape {m.shape}")
    return m


@dataclass(frozen=True)
class RigidTransform:
    """Proper rigid motion: p -> R @ p + t.

    rotation is stored as a nested tuple so transforms hash and compare by
    value; orthonormality (R^T R = I within 1e-9) and det(R) = +1 are
    enforced at construction.
    """

    rotation: tuple = ((1.0, 0.0, 0.0), (0.0, 1.0, 0.0), (0.0, 0.0, 1.0))
    translation: Point3 = ORIGIN

    def __post_init__(self):
        m = _as_matrix(self.rotation)
        if not np.all(np.isfinite(m)):
            raise InvalidGeometryError("non-finite rotation matrix")
        if np.max(np.abs(m.T @ m - np.eye(3))) > 1e-9:
            raise InvalidGeometryError("rotation is not orthonormal within 1e-9")
        if np.linalg.det(m) < 0.0:
            raise InvalidGeometryError("rotation must be proper (det = +1)")
        object.__setattr__(self, "rotation", tuple(tuple(float(v) for v in row) for row in m))

    @classmethod
    def identity(cls) -> "RigidTransform":
        return cls()

    @classmethod
    def translate(cls, x: float, y: float, z: float) -> "RigidTransform":
        return cls(translation=Point3(x, y, z))

    @classmethod
    def rotate_axis(cls, axis: str, angle_rad: float) -> "RigidTransform":
        c, s = math.cos(angle_rad), math.sin(angle_rad)
        mats = {
            "x": ((1, 0, 0), (0, c, -s), (0, s, c)),
            "y": ((c, 0, s), (0, 1, 0), (-s, 0, c)),
            "z": ((c, -s, 0), (s, c, 0), (0, 0, 1)),
        }
        return cls(rotation=mats[axis])

    @classmethod
    def from_euler_xyz_deg(cls, rx: float, ry: float, rz: float,
                           translation: Point3 = ORIGIN) -> "RigidTransform":
        """Extrinsic rotations applied x then y then z (R = Rz @ Ry @ Rx)."""
        r = (cls.rotate_axis("z", math.radians(rz)).matrix
             @ cls.rotate_axis("y", math.radians(ry)).matrix
             @ cls.rotate_axis("x", math.radians(rx)).matrix)
        return cls(rotation=r, translation=translation)

    @property
    def matrix(self) -> np.ndarray:
        return np.array(self.rotation, dtype=float)

    def compose(self, inner: "RigidTransform") -> "RigidTransform":
        """self after inner: (self.compose(inner))(p) == self(inner(p))."""
        r = self.matrix @ inner.matrix
        t = self.apply_point(inner.translation)
        return RigidTransform(rotation=r, translation=t)

    def inverse(self) -> "RigidTransform":
        rt = self.matrix.T
        t = -(rt @ self.translation.as_array())
        return RigidTransform(rotation=rt, translation=Point3.from_array(t))

    def apply(self, points: np.ndarray) -> np.ndarray:
        """Transform an (n, 3) array of points."""
        pts = np.asarray(points, dtype=float)
        return pts @ self.matrix.T + self.translation.as_array()

    def apply_point(self, p: Point3) -> Point3:
        return Point3.from_array(self.apply(p.as_array().reshape(1, 3))[0])

    def is_identity(self, tol: float = 0.0) -> bool:
        return (np.max(np.abs(self.matrix - np.eye(3))) <= tol
                and self.translation.as_array().dot(self.translation.as_array()) <= tol * tol)


IDENTITY = RigidTransform()


def _newell_normal(coords: np.ndarray) -> np.ndarray:
    """Area-weighted polygon normal (Newell); robust for slightly non-planar loops."""
    centered = coords - coords.mean(axis=0)
    rolled = np.roll(centered, -1, axis=0)
    return 0.5 * np.cross(centered, rolled).sum(axis=0)


@dataclass(frozen=True)
class Facet:
    """Planar polygonal face with an outward normal derived from its winding."""

    vertices: tuple
    rgb: tuple = DEFAULT_RGB
    coords: np.ndarray = field(init=False, compare=False, repr=False)
    normal: np.ndarray = field(init=False, compare=False, repr=False)
    plane_d: float = field(init=False, compare=False, repr=False)
    area: float = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        verts = tuple(v if isinstance(v, Point3) else Point3.from_array(v) for v in self.vertices)
        if len(verts) < 3:
            raise InvalidGeometryError(f"facet needs >= 3 vertices, got {len(verts)}")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "rgb", tuple(float(c) for c in self.rgb))
        coords = np.array([[v.x, v.y, v.z] for v in verts], dtype=float)
        coords.setflags(write=False)
        object.__setattr__(self, "coords", coords)
        n = _newell_normal(coords)
        area = float(np.linalg.norm(n))
        if area <= 0.0:
            raise InvalidGeometryError("degenerate facet (zero area)")
        n = n / area
        n.setflags(write=False)
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "area", area)
        object.__setattr__(self, "plane_d", float(np.mean(coords @ n)))

    def plane_deviation(self) -> float:
        """Largest distance of any vertex from the supporting plane."""
        return float(np.max(np.abs(self.coords @ self.normal - self.plane_d)))

    def flipped(self) -> "Facet":
        return Facet(tuple(reversed(self.vertices)), self.rgb)

    def transformed(self, t: RigidTransform) -> "Facet":
        return Facet(tuple(Point3.from_array(p) for p in t.apply(self.coords)), self.rgb)


@dataclass(frozen=True)
class Volume:
    """Closed polyhedral solid bounded by facets (one or more closed shells)."""

    name: str
    facets: tuple

    def __post_init__(self):
        object.__setattr__(self, "facets", tuple(self.facets))
        if not self.facets:
            raise InvalidGeometryError(f"volume {self.name!r} has no facets")

    def all_coords(self) -> np.ndarray:
        return np.vstack([f.coords for f in self.facets])

    def bounding_box(self) -> tuple:
        pts = self.all_coords()
        return pts.min(axis=0), pts.max(axis=0)

    def diagonal(self) -> float:
        lo, hi = self.bounding_box()
        return float(np.linalg.norm(hi - lo))

    def transformed(self, t: RigidTransform) -> "Volume":
        return Volume(self.name, tuple(f.transformed(t) for f in self.facets))


@dataclass(frozen=True)
class Style:
    """Display style carried by a supervolume."""

    fill: bool = True
    edge_rgb: tuple = (0.0, 0.0, 0.0)
    base_rgb: tuple = DEFAULT_RGB


@dataclass(frozen=True)
class SuperVolume:
    """Named ensemble of closed volumes; the unit of display and boolean algebra."""

    name: str
    volumes: tuple
    transform: RigidTransform = IDENTITY
    style: Style = Style()

    def __post_init__(self):
        object.__setattr__(self, "volumes", tuple(self.volumes))
        names = [v.name for v in self.volumes]
        if len(set(names)) != len(names):
            raise InvalidGeometryError(f"duplicate volume names inside supervolume {self.name!r}")

    def world_volumes(self) -> tuple:
        """Member volumes with the supervolume transform baked into world coordinates."""
        if self.transform.is_identity():
            return self.volumes
        return tuple(v.transformed(self.transform) for v in self.volumes)

    def world_facets(self) -> list:
        return [f for v in self.world_volumes() for f in v.facets]


def apply_transform(sv: SuperVolume, t: RigidTransform) -> SuperVolume:
    """Compose t on top of the supervolume's transform (style preserved)."""
    return replace(sv, transform=t.compose(sv.transform))


# ---------------------------------------------------------------------------
# Primitive solid generators
# ---------------------------------------------------------------------------

_BOX_FACES = (
    (0, 4, 6, 2),   # -x
    (1, 3, 7, 5),   # +x
    (0, 1, 5, 4),   # -y
    (2, 6, 7, 3),   # +y
    (0, 2, 3, 1),   # -z
    (4, 5, 7, 6),   # +z
)


def _facets_from_indexed(coords: np.ndarray, faces: Iterable[Sequence[int]], rgb) -> list:
    """Build facets from an indexed mesh, dropping faces that collapse."""
    facets = []
    for face in faces:
        loop = []
        for i in face:
            p = coords[i]
            if loop and np.array_equal(loop[-1], p):
                continue
            loop.append(p)
        while len(loop) > 1 and np.array_equal(loop[0], loop[-1]):
            loop.pop()
        if len(loop) < 3:
            continue
        pts = np.array(loop)
        if np.linalg.norm(_newell_normal(pts)) <= 0.0:
            continue
        facets.append(Facet(tuple(Point3.from_array(p) for p in loop), rgb))
    return facets


def make_box(name: str, half_extents, rgb=DEFAULT_RGB) -> Volume:
    """Axis-aligned box centered at the origin; half_extents = (hx, hy, hz)."""
    hx, hy, hz = (float(h) for h in half_extents)
    if hx <= 0 or hy <= 0 or hz <= 0:
        raise InvalidDimensionError(f"box half extents must be > 0, got {(hx, hy, hz)}")
    corners = np.array([[hx * (1 if i & 1 else -1),
                         hy * (1 if i & 2 else -1),
                         hz * (1 if i & 4 else -1)] for i in range(8)])
    return Volume(name, tuple(_facets_from_indexed(corners, _BOX_FACES, rgb)))


_TRD_FACES = (
    (0, 3, 2, 1),   # -z cap
    (4, 5, 6, 7),   # +z cap
    (0, 1, 5, 4),   # -y
    (2, 3, 7, 6),   # +y
    (1, 2, 6, 5),   # +x
    (3, 0, 4, 7),   # -x
)


def make_trd(name: str, x1: float, x2: float, y1: float, y2: float, dz: float,
             rgb=DEFAULT_RGB) -> Volume:
    """Trapezoidal prism: x half-width x1 at z=-dz, x2 at z=+dz; same in y."""
    x1, x2, y1, y2, dz = (float(v) for v in (x1, x2, y1, y2, dz))
    if min(x1, x2, y1, y2) < 0 or dz <= 0:
        raise InvalidDimensionError("trd lengths must be >= 0 and dz > 0")
    if (x1 == 0 and x2 == 0) or (y1 == 0 and y2 == 0):
        raise InvalidDimensionError("trd has a zero-area face pair (x or y extent vanishes)")
    corners = np.array([
        [-x1, -y1, -dz], [x1, -y1, -dz], [x1, y1, -dz], [-x1, y1, -dz],
        [-x2, -y2, dz], [x2, -y2, dz], [x2, y2, dz], [-x2, y2, dz],
    ])
    return Volume(name, tuple(_facets_from_indexed(corners, _TRD_FACES, rgb)))


def make_tube(name: str, r_in: float, r_out: float, dz: float, n_sides: int = 32,
              rgb=DEFAULT_RGB) -> Volume:
    """Prismatic polygonal tube; r_in = 0 gives a solid prism, r_in > 0 an annulus."""
    r_in, r_out, dz = float(r_in), float(r_out), float(dz)
    if r_in < 0 or r_in >= r_out:
        raise InvalidDimensionError(f"tube needs 0 <= r_in < r_out, got {(r_in, r_out)}")
    if dz <= 0:
        raise InvalidDimensionError("tube needs dz > 0")
    n = int(n_sides)
    if n < 3:
        raise InvalidDimensionError("tube needs n_sides >= 3")
    ang = 2.0 * math.pi * np.arange(n) / n
    ring = np.stack([np.cos(ang), np.sin(ang)], axis=1)
    out_bot = np.column_stack([r_out * ring, np.full(n, -dz)])
    out_top = np.column_stack([r_out * ring, np.full(n, dz)])
    faces = []
    if r_in == 0.0:
        coords = np.vstack([out_bot, out_top])
        faces.append(tuple(range(n - 1, -1, -1)))              # -z cap, CCW from below
        faces.append(tuple(range(n, 2 * n)))                   # +z cap
        for i in range(n):
            j = (i + 1) % n
            faces.append((i, j, n + j, n + i))                 # outer wall
    else:
        in_bot = np.column_stack([r_in * ring, np.full(n, -dz)])
        in_top = np.column_stack([r_in * ring, np.full(n, dz)])
        coords = np.vstack([out_bot, out_top, in_bot, in_top])
        ob, ot, ib, it = 0, n, 2 * n, 3 * n
        for i in range(n):
            j = (i + 1) % n
            faces.append((ob + i, ob + j, ot + j, ot + i))     # outer wall, outward
            faces.append((ib + j, ib + i, it + i, it + j))     # inner wall, toward axis
            faces.append((ob + j, ob + i, ib + i, ib + j))     # -z cap ring sector
            faces.append((ot + i, ot + j, it + j, it + i))     # +z cap ring sector
    return Volume(name, tuple(_facets_from_indexed(coords, faces, rgb)))


# ---------------------------------------------------------------------------
# Mesh interrogation: signed volume, edges, membership, validation
# ---------------------------------------------------------------------------

def facet_signed_volume(coords: np.ndarray) -> float:
    """Signed volume contribution of one facet (divergence theorem over a fan)."""
    v0 = coords[0]
    a = coords[1:-1] - v0
    b = coords[2:] - v0
    return float(np.sum(np.cross(a, b) @ v0) / 6.0)


def signed_volume(volume: Volume) -> float:
    """Enclosed signed volume in mm^3; positive when normals point outward."""
    return sum(facet_signed_volume(f.coords) for f in volume.facets)


def _vertex_index_map(volume: Volume):
    """Exact-coordinate welding of facet vertices into a shared index space."""
    index = {}
    loops = []
    for f in volume.facets:
        loop = []
        for v in f.vertices:
            key = (v.x, v.y, v.z)
            i = index.get(key)
            if i is None:
                i = len(index)
                index[key] = i
            loop.append(i)
        loops.append(loop)
    coords = np.array([k for k in index.keys()], dtype=float)
    return coords, loops


def volume_edges(volume: Volume):
    """Unique undirected mesh edges as (coords, (n_edges, 2) index array, loops)."""
    coords, loops = _vertex_index_map(volume)
    edges = set()
    for loop in loops:
        for a, b in zip(loop, loop[1:] + loop[:1]):
            if a != b:
                edges.add((a, b) if a < b else (b, a))
    return coords, np.array(sorted(edges), dtype=int), loops


def point_in_volume(point, volume: Volume, eps: float | None = None) -> bool:
    """Ray-parity membership test against a closed mesh."""
    p = np.asarray(point, dtype=float).reshape(3)
    lo, hi = volume.bounding_box()
    diag = float(np.linalg.norm(hi - lo))
    if diag == 0.0:
        return False
    if eps is None:
        eps = EPS_GEOM_REL * diag
    # a couple of unlikely directions in case the first ray grazes an edge
    for d in ((0.57735026, 0.79312345, 0.19456713), (0.11135291, 0.45980137, 0.88101733)):
        direction = np.asarray(d)
        crossings = 0
        ok = True
        for f in volume.facets:
            denom = float(f.normal @ direction)
            if abs(denom) < 1e-12:
                continue
            t = (f.plane_d - float(f.normal @ p)) / denom
            if t <= eps:
                if t >= -eps:
                    ok = False  # point sits on this facet plane near the facet
                    break
                continue
            hit = p + t * direction
            side = _point_in_polygon_3d(hit, f, eps)
            if side == 2:
                ok = False
                break
            crossings += side
        if ok:
            return crossings % 2 == 1
    return crossings % 2 == 1


def _point_in_polygon_3d(hit: np.ndarray, facet: Facet, eps: float) -> int:
    """0 outside, 1 inside, 2 on-boundary (within eps) for a point on the facet plane."""
    n = facet.normal
    ax = int(np.argmax(np.abs(n)))
    keep = [i for i in range(3) if i != ax]
    poly = facet.coords[:, keep]
    q = hit[keep]
    inside = False
    px, py = poly[:, 0], poly[:, 1]
    nx, ny = np.roll(px, -1), np.roll(py, -1)
    for x0, y0, x1, y1 in zip(px, py, nx, ny):
        ex, ey = x1 - x0, y1 - y0
        elen2 = ex * ex + ey * ey
        if elen2 > 0.0:
            t = ((q[0] - x0) * ex + (q[1] - y0) * ey) / elen2
            t = min(1.0, max(0.0, t))
            dx, dy = q[0] - (x0 + t * ex), q[1] - (y0 + t * ey)
            if dx * dx + dy * dy <= eps * eps:
                return 2
        if (y0 > q[1]) != (y1 > q[1]):
            xc = x0 + (q[1] - y0) / (y1 - y0) * ex
            if q[0] < xc:
                inside = not inside
    return 1 if inside else 0


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate(): closedness, Euler data, planarity, signed volume."""

    passed: bool
    closed: bool
    orientation_ok: bool
    simple_ok: bool
    planarity_max_dev: float
    planarity_tol: float
    signed_vol: float
    euler_by_component: tuple
    euler_ok: bool
    messages: tuple

    @property
    def euler_characteristic(self) -> int:
        return sum(self.euler_by_component)


def _polygon_is_simple(facet: Facet, eps: float) -> bool:
    """Non-self-intersecting test in the facet plane (adjacent edges may be collinear)."""
    n = facet.normal
    ax = int(np.argmax(np.abs(n)))
    keep = [i for i in range(3) if i != ax]
    poly = facet.coords[:, keep]
    k = len(poly)
    for i in range(k):
        a0, a1 = poly[i], poly[(i + 1) % k]
        for j in range(i + 1, k):
            if j == i or (j + 1) % k == i or (i + 1) % k == j:
                continue
            b0, b1 = poly[j], poly[(j + 1) % k]
            if _segments_cross_2d(a0, a1, b0, b1, eps):
                return False
    return True


def _segments_cross_2d(a0, a1, b0, b1, eps) -> bool:
    da, db = a1 - a0, b1 - b0
    denom = da[0] * db[1] - da[1] * db[0]
    r = b0 - a0
    if abs(denom) < 1e-30:
        return False
    t = (r[0] * db[1] - r[1] * db[0]) / denom
    u = (r[0] * da[1] - r[1] * da[0]) / denom
    return eps < t < 1 - eps and eps < u < 1 - eps


def validate(volume: Volume) -> ValidationReport:
    """Check the closed-mesh invariants the renderer and CSG rely on.

    Passes iff the boundary is closed (every edge shared by exactly two
    facets with opposite traversal), all facets are planar within the
    scale-relative tolerance and simple, each connected component has an
    even Euler characteristic <= 2, and the total signed volume is positive.
    """
    messages = []
    diag = volume.diagonal()
    eps_plane = EPS_PLANE_REL * max(diag, 1e-30)

    max_dev = max(f.plane_deviation() for f in volume.facets)
    planar_ok = max_dev <= eps_plane
    if not planar_ok:
        messages.append(f"planarity violation: max deviation {max_dev:.3e} > {eps_plane:.3e}")

    simple_ok = all(_polygon_is_simple(f, 1e-12) for f in volume.facets)
    if not simple_ok:
        messages.append("self-intersecting facet polygon")

    coords, loops = _vertex_index_map(volume)
    directed = {}
    closed = True
    for li, loop in enumerate(loops):
        for a, b in zip(loop, loop[1:] + loop[:1]):
            if a == b:
                closed = False
                messages.append(f"zero-length edge in facet {li}")
                continue
            directed[(a, b)] = directed.get((a, b), 0) + 1
    orientation_ok = True
    if closed:
        for (a, b), count in directed.items():
            opposite = directed.get((b, a), 0)
            if count != 1 or opposite != 1:
                closed = closed and (count + opposite == 2)
                orientation_ok = False
        if not orientation_ok:
            for (a, b), count in directed.items():
                if count + directed.get((b, a), 0) != 2:
                    closed = False
                    messages.append("edge-pairing violation: edge not shared by exactly 2 facets")
                    break
            else:
                messages.append("edge-pairing violation: duplicated traversal direction")

    # connected components over shared undirected edges
    parent = list(range(len(loops)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    edge_owners = {}
    for li, loop in enumerate(loops):
        for a, b in zip(loop, loop[1:] + loop[:1]):
            key = (a, b) if a < b else (b, a)
            if key in edge_owners:
                ra, rb = find(edge_owners[key]), find(li)
                parent[ra] = rb
            else:
                edge_owners[key] = li

    comps = {}
    for li in range(len(loops)):
        comps.setdefault(find(li), []).append(li)
    euler_by_component = []
    for members in comps.values():
        vset, eset = set(), set()
        for li in members:
            loop = loops[li]
            vset.update(loop)
            for a, b in zip(loop, loop[1:] + loop[:1]):
                if a != b:
                    eset.add((a, b) if a < b else (b, a))
        euler_by_component.append(len(vset) - len(eset) + len(members))
    euler_ok = all(chi <= 2 and chi % 2 == 0 for chi in euler_by_component)
    if not euler_ok:
        messages.append(f"inconsistent Euler characteristics {euler_by_component}")

    vol = signed_volume(volume)
    vol_ok = vol > 0.0
    if not vol_ok:
        messages.append(f"signed volume not positive: {vol:.6e}")

    passed = planar_ok and simple_ok and closed and orientation_ok and euler_ok and vol_ok
    return ValidationReport(
        passed=passed,
        closed=closed,
        orientation_ok=orientation_ok,
        simple_ok=simple_ok,
        planarity_max_dev=max_dev,
        planarity_tol=eps_plane,
        signed_vol=vol,
        euler_by_component=tuple(sorted(euler_by_component)),
        euler_ok=euler_ok,
        messages=tuple(messages),
    )


def require_valid(volumes: Iterable[Volume], context: str = "operation") -> None:
    for v in volumes:
        report = validate(v)
        if not report.passed:
            raise InvalidGeometryError(
                f"{context}: volume {v.name!r} fails validation: {'; '.join(report.messages)}")


def scene_bounds(supervolumes: Iterable[SuperVolume]):
    """World-frame bounding box over every facet of every supervolume."""
    los, his = [], []
    for sv in supervolumes:
        for v in sv.world_volumes():
            lo, hi = v.bounding_box()
            los.append(lo)
            his.append(hi)
    if not los:
        return np.zeros(3), np.zeros(3)
    return np.min(los, axis=0), np.max(his, axis=0)


def scene_diagonal(supervolumes: Iterable[SuperVolume]) -> float:
    lo, hi = scene_bounds(supervolumes)
    return float(np.linalg.norm(hi - lo))
