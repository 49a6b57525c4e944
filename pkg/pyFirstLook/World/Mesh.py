# -*- coding=utf-8 -*-

# ------------------------------------------------------------------
# File Name:        Mesh.py
# Author:           pyFirstLook contributors
# Version:          1.0.0
# Created:          2026/10/18
# Description:      Triangle surface meshes: synthetic face generators,
#                   receding-face transform, OBJ/PLY ingestion and
#                   surface sampling.
# Function List:    SurfaceMesh: Vertices plus triangle indices.
#                   surface_params: Validate generator parameters.
#                   make_surface: Build a synthetic surface by kind.
#                   recede_face: Rigidly translate a surface.
#                   sample_surface: Dense points on the surface.
#                   load_mesh: Read an OBJ or ascii PLY mesh.
#                   save_mesh: Write an OBJ or ascii PLY mesh.
# History:
#       <author>                  <version>   <time>      <desc>
#       pyFirstLook contributors  1.0.0       2026/10/18  Created file
# ------------------------------------------------------------------

import logging
import math
from pathlib import Path
from typing import List, Optional, Tuple

import numpy as np
from pydantic import Field, model_validator

from ..Core import PointCloud, read_ply, write_ply
from ..Errors import InvalidParams, IoError, ParseError, ValidationError, in_range
from ..Settings import FirstLookModel

logger = logging.getLogger(__name__)

# Triangles with an area at or below this are dropped at ingestion
MIN_TRIANGLE_AREA = 1e-12

KINDS = ('plane', 'sine-wall', 'two-plane-corner', 'heightfield-from-grid', 'sphere')


class SurfaceMesh(object):
    def __init__(self,
                 vertices,
                 triangles,
                 kind='file',
                 params=None) -> None:
        '''Initialize the mesh.

        Args:
            vertices: Array-like (V, 3).
            triangles: Array-like (T, 3) of vertex indices.
            kind: Generator tag, or 'file'.
            params: Generator parameters kept for oracles.

        Returns:
            None

        Raises:
            InvalidParams: On non-finite vertices or out-of-range indices.
        '''

        verts = np.array(vertices, dtype=np.float64).reshape(-1, 3)
        tris = np.array(triangles, dtype=np.int64).reshape(-1, 3)
        if not np.isfinite(verts).all():
            raise InvalidParams('mesh has non-finite vertices')
        if tris.size and (tris.min() < 0 or tris.max() >= verts.shape[0]):
            raise InvalidParams('triangle index out of range [0, %d)' % verts.shape[0])

        areas = _triangle_areas(verts, tris)
        keep = areas > MIN_TRIANGLE_AREA
        if not keep.all():
            logger.warning('Dropped %d degenerate triangles', int(np.count_nonzero(~keep)))
            tris = tris[keep]

        verts.setflags(write=False)
        tris.setflags(write=False)
        self.vertices = verts
        self.triangles = tris
        self.kind = kind
        self.params = dict(params or {})

    def __len__(self):
        return self.triangles.shape[0]

    def __repr__(self):
        return 'SurfaceMesh(kind=%r, %d vertices, %d triangles)' % (self.kind,
                                                                   self.vertices.shape[0],
                                                                   len(self))

    def corners(self):
        '''Triangle corner arrays (v0, v1, v2), each (T, 3).'''

        return (self.vertices[self.triangles[:, 0]],
                self.vertices[self.triangles[:, 1]],
                self.vertices[self.triangles[:, 2]])

    def normals(self):
        v0, v1, v2 = self.corners()
        n = np.cross(v1 - v0, v2 - v0)
        return n / np.linalg.norm(n, axis=1, keepdims=True)

    def bounds(self):
        return self.vertices.min(axis=0), self.vertices.max(axis=0)


def _triangle_areas(verts,
                    tris):
    if tris.size == 0:
        return np.empty(0)
    v0, v1, v2 = verts[tris[:, 0]], verts[tris[:, 1]], verts[tris[:, 2]]
    return 0.5 * np.linalg.norm(np.cross(v1 - v0, v2 - v0), axis=1)


def _axis_samples(low,
                  high,
                  cell):
    count = max(1, int(math.ceil((high - low) / cell - 1e-9)))
    return np.linspace(low, high, count + 1)


def _grid_triangles(n_u,
                    n_v):
    '''Two triangles per cell of an n_u x n_v vertex grid (row-major in u).'''

    tris = []
    for i in range(n_u - 1):
        for j in range(n_v - 1):
            a = i * n_v + j
            b = (i + 1) * n_v + j
            c = (i + 1) * n_v + j + 1
            d = i * n_v + j + 1
            tris.append((a, b, c))
            tris.append((a, c, d))
    return np.array(tris, dtype=np.int64).reshape(-1, 3)


class _WallParams(FirstLookModel):
    x0: float = 20.0
    y_min: float = -50.0
    y_max: float = 50.0
    z_min: float = 0.0
    z_max: float = 60.0
    cell: float = Field(5.0, gt=0.0)

    @model_validator(mode='after')
    def _check_extent(self):
        if not (self.y_max > self.y_min and self.z_max > self.z_min):
            raise ValueError('extent must satisfy y_max > y_min and z_max > z_min')
        return self


class PlaneParams(_WallParams):
    '''Vertical plane x = x0 spanning the y/z extent.'''


class SineWallParams(_WallParams):
    '''Wall x = x0 + amplitude * sin(2 pi y / wavelength).'''

    amplitude: float = 3.0
    wavelength: float = Field(25.0, gt=0.0)


class CornerParams(FirstLookModel):
    '''Two vertical half-planes sharing the edge at (x0, y_corner).

    Face A runs from the edge toward -y; face B leaves the edge rotated by
    angle_deg from face A (90 gives an external box corner).
    '''

    x0: float = 20.0
    y_corner: float = 0.0
    angle_deg: float = Field(90.0, gt=0.0, lt=180.0)
    length_a: float = Field(60.0, gt=0.0)
    length_b: float = Field(60.0, gt=0.0)
    z_min: float = 0.0
    z_max: float = 60.0
    cell: float = Field(5.0, gt=0.0)


class HeightfieldParams(FirstLookModel):
    '''Wall x = x0 + heights[k][j] over a regular (z, y) grid.

    Without explicit heights, a seeded random grid of ny x nz cells with
    uniform offsets in [-roughness, roughness] is generated.
    '''

    x0: float = 20.0
    y_min: float = -50.0
    z_min: float = 0.0
    cell: float = Field(5.0, gt=0.0)
    heights: Optional[List[List[float]]] = None
    ny: int = Field(20, ge=1)
    nz: int = Field(12, ge=1)
    roughness: float = Field(1.0, ge=0.0)


class SphereParams(FirstLookModel):
    center: Tuple[float, float, float] = (20.0, 0.0, 0.0)
    radius: float = Field(10.0, gt=0.0)
    n_lat: int = Field(24, ge=3)
    n_lon: int = Field(48, ge=4)


_PARAMS = {
    'plane': PlaneParams,
    'sine-wall': SineWallParams,
    'two-plane-corner': CornerParams,
    'heightfield-from-grid': HeightfieldParams,
    'sphere': SphereParams,
}


def _wall(params,
          offset):
    ys = _axis_samples(params.y_min, params.y_max, params.cell)
    zs = _axis_samples(params.z_min, params.z_max, params.cell)
    verts = [(params.x0 + offset(y, z), y, z) for y in ys for z in zs]
    return verts, _grid_triangles(len(ys), len(zs))


def _corner(params):
    edge = np.array([params.x0, params.y_corner])
    face_a = np.array([0.0, -1.0])
    turn = math.radians(params.angle_deg)
    face_b = np.array([math.cos(-0.5 * math.pi + turn), math.sin(-0.5 * math.pi + turn)])
    # Arc-length stations: face A from its far end to the edge, then face B
    s_a = _axis_samples(0.0, params.length_a, params.cell)[::-1]
    s_b = _axis_samples(0.0, params.length_b, params.cell)[1:]
    stations = [edge + face_a * s for s in s_a] + [edge + face_b * s for s in s_b]
    zs = _axis_samples(params.z_min, params.z_max, params.cell)
    verts = [(p[0], p[1], z) for p in stations for z in zs]
    return verts, _grid_triangles(len(stations), len(zs))


def _heightfield(params,
                 seed):
    if params.heights is not None:
        heights = np.array(params.heights, dtype=np.float64)
        if heights.ndim != 2 or heights.shape[0] < 2 or heights.shape[1] < 2:
            raise InvalidParams('heights must be a grid of at least 2 x 2 values')
    else:
        rng = np.random.default_rng(seed)
        heights = rng.uniform(-params.roughness, params.roughness, size=(params.nz + 1, params.ny + 1))
    n_z, n_y = heights.shape
    verts = [(params.x0 + heights[k, j], params.y_min + j * params.cell, params.z_min + k * params.cell)
             for j in range(n_y) for k in range(n_z)]
    return verts, _grid_triangles(n_y, n_z)


def _sphere(params):
    cx, cy, cz = params.center
    verts = [(cx, cy, cz + params.radius)]
    for i in range(1, params.n_lat):
        theta = math.pi * i / params.n_lat
        for j in range(params.n_lon):
            phi = 2.0 * math.pi * j / params.n_lon
            verts.append((cx + params.radius * math.sin(theta) * math.cos(phi),
                          cy + params.radius * math.sin(theta) * math.sin(phi),
                          cz + params.radius * math.cos(theta)))
    verts.append((cx, cy, cz - params.radius))
    south = len(verts) - 1
    ring = lambda i, j: 1 + (i - 1) * params.n_lon + (j % params.n_lon)
    tris = []
    for j in range(params.n_lon):
        tris.append((0, ring(1, j), ring(1, j + 1)))
        tris.append((south, ring(params.n_lat - 1, j + 1), ring(params.n_lat - 1, j)))
    for i in range(1, params.n_lat - 1):
        for j in range(params.n_lon):
            a, b = ring(i, j), ring(i, j + 1)
            c, d = ring(i + 1, j + 1), ring(i + 1, j)
            tris.append((a, d, c))
            tris.append((a, c, b))
    return verts, tris


def surface_params(kind,
                   params=None):
    '''Validated generator parameters of a surface kind.

    Raises:
        InvalidParams: On an unknown kind or invalid parameters.
    '''

    if kind not in _PARAMS:
        raise InvalidParams('unknown surface kind %r, expected one of %s' % (kind, ', '.join(KINDS)))
    try:
        return _PARAMS[kind].build(**(params or {}))
    except ValidationError as exc:
        raise InvalidParams(str(exc)) from exc


def make_surface(kind,
                 params=None,
                 seed=0):
    '''Build a synthetic surface.

    Args:
        kind: One of plane, sine-wall, two-plane-corner,
            heightfield-from-grid, sphere.
        params: Dict of generator parameters; missing keys take defaults.
        seed: Seed of the random heightfield (other kinds ignore it).

    Returns:
        mesh: SurfaceMesh tagged with kind and the validated parameters.

    Raises:
        InvalidParams: On an unknown kind or invalid parameters.
    '''

    model = surface_params(kind, params)

    if kind == 'plane':
        verts, tris = _wall(model, lambda y, z: 0.0)
    elif kind == 'sine-wall':
        verts, tris = _wall(model,
                            lambda y, z: model.amplitude * math.sin(2.0 * math.pi * y / model.wavelength))
    elif kind == 'two-plane-corner':
        verts, tris = _corner(model)
    elif kind == 'heightfield-from-grid':
        verts, tris = _heightfield(model, seed)
    else:
        verts, tris = _sphere(model)

    recorded = model.model_dump()
    recorded['seed'] = seed
    mesh = SurfaceMesh(verts, tris, kind=kind, params=recorded)
    logger.info('Generated %s', mesh)
    return mesh


def recede_face(mesh,
                direction,
                distance):
    '''Translate every vertex by direction * distance; topology unchanged.

    Raises:
        InvalidParams: If distance is negative or direction has zero length.
    '''

    distance = in_range(distance, val_min=0.0, name='distance', error=InvalidParams)
    direction = np.asarray(direction, dtype=np.float64).reshape(3)
    norm = float(np.linalg.norm(direction))
    if not math.isfinite(norm) or norm <= 0.0:
        raise InvalidParams('recede direction must be a non-zero finite vector')
    params = dict(mesh.params)
    params['recede'] = {'direction': (direction / norm).tolist(), 'distance': distance}
    return SurfaceMesh(mesh.vertices + direction / norm * distance,
                       mesh.triangles,
                       kind=mesh.kind,
                       params=params)


_BARY_CACHE = {}


def _barycentric(n):
    if n not in _BARY_CACHE:
        ij = [(i, j) for i in range(n + 1) for j in range(n + 1 - i)]
        _BARY_CACHE[n] = np.array(ij, dtype=np.float64) / n
    return _BARY_CACHE[n]


def sample_surface(mesh,
                   spacing):
    '''Deterministic dense sampling of the mesh surface.

    Every triangle is sampled on a barycentric lattice whose edge spacing is
    at most `spacing`; points shared by neighbouring triangles are merged.

    Returns:
        cloud: PointCloud of the sampled points.
    '''

    spacing = in_range(spacing, val_min=0.0, name='spacing', error=InvalidParams, min_open=True)
    v0, v1, v2 = mesh.corners()
    longest = np.max(np.stack([np.linalg.norm(v1 - v0, axis=1),
                               np.linalg.norm(v2 - v0, axis=1),
                               np.linalg.norm(v2 - v1, axis=1)]), axis=0)
    counts = np.maximum(1, np.ceil(longest / spacing - 1e-9)).astype(np.int64)
    chunks = []
    for n in np.unique(counts):
        sel = counts == n
        bary = _barycentric(int(n))
        e1 = (v1[sel] - v0[sel])[:, None, :]
        e2 = (v2[sel] - v0[sel])[:, None, :]
        pts = v0[sel][:, None, :] + bary[None, :, 0:1] * e1 + bary[None, :, 1:2] * e2
        chunks.append(pts.reshape(-1, 3))
    points = np.concatenate(chunks) if chunks else np.empty((0, 3))
    return PointCloud(np.unique(points, axis=0))


def _read_obj(path):
    try:
        with open(path, 'r', encoding='utf-8') as obj_file:
            lines = obj_file.read().splitlines()
    except OSError as exc:
        raise IoError('cannot read %s: %s' % (path, exc)) from exc
    verts = []
    tris = []
    for lineno, line in enumerate(lines, start=1):
        tokens = line.split('#', 1)[0].split()
        if not tokens:
            continue
        if tokens[0] == 'v':
            if len(tokens) < 4:
                raise ParseError('vertex needs 3 coordinates', line=lineno)
            try:
                verts.append([float(t) for t in tokens[1:4]])
            except ValueError:
                raise ParseError('invalid vertex %r' % line, line=lineno) from None
        elif tokens[0] == 'f':
            try:
                face = [int(t.split('/')[0]) for t in tokens[1:]]
            except ValueError:
                raise ParseError('invalid face %r' % line, line=lineno) from None
            if len(face) < 3:
                raise ParseError('face needs at least 3 vertices', line=lineno)
            face = [f - 1 if f > 0 else len(verts) + f for f in face]
            # Fan triangulation of polygons
            for k in range(1, len(face) - 1):
                tris.append((face[0], face[k], face[k + 1]))
    return verts, tris


def load_mesh(path):
    '''Read an OBJ (v/f subset) or ascii PLY mesh.

    Raises:
        ParseError: With the offending line number.
        IoError: If the file cannot be read.
        InvalidParams: If indices are out of range.
    '''

    suffix = Path(path).suffix.lower()
    if suffix == '.obj':
        verts, tris = _read_obj(path)
    elif suffix == '.ply':
        verts, faces, _ = read_ply(path)
        tris = [(f[0], f[k], f[k + 1]) for f in faces for k in range(1, len(f) - 1)]
    else:
        raise ParseError('unsupported mesh format %r' % suffix)
    mesh = SurfaceMesh(verts, tris, kind='file', params={'path': str(path)})
    logger.info('Loaded %s from %s', mesh, path)
    return mesh


def save_mesh(mesh,
              path):
    '''Write the mesh as OBJ or ascii PLY, chosen by suffix.'''

    suffix = Path(path).suffix.lower()
    if suffix == '.ply':
        write_ply(path, mesh.vertices, mesh.triangles)
        return
    if suffix != '.obj':
        raise ParseError('unsupported mesh format %r' % suffix)
    try:
        with open(path, 'w', encoding='utf-8') as obj_file:
            obj_file.write('# %s\n' % mesh.kind)
            for v in mesh.vertices:
                obj_file.write('v %.17g %.17g %.17g\n' % tuple(v))
            for t in mesh.triangles:
                obj_file.write('f %d %d %d\n' % (t[0] + 1, t[1] + 1, t[2] + 1))
    except OSError as exc:
        raise IoError('cannot write %s: %s' % (path, exc)) from exc
