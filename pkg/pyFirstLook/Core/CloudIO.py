# -*- coding=utf-8 -*-

# ------------------------------------------------------------------
# File Name:        CloudIO.py
# Author:           pyFirstLook contributors
# Version:          1.0.0
# Created:          2026/10/18
# Description:      ASCII readers and writers for point clouds
#                   (ply-ascii, xyz-csv) and the PLY header parser
#                   shared with the mesh loader.
# Function List:    infer_format: Pick a format from the file suffix.
#                   read_ply: Parse an ascii PLY file.
#                   load_cloud: Read a point cloud.
#                   save_cloud: Write a point cloud.
# History:
#       <author>                  <version>   <time>      <desc>
#       pyFirstLook contributors  1.0.0       2026/10/18  Created file
# ------------------------------------------------------------------

import logging
from pathlib import Path

import numpy as np

from ..Errors import IoError, ParseError
from .Geometry import PointCloud

logger = logging.getLogger(__name__)

PLY_ASCII = 'ply-ascii'
XYZ_CSV = 'xyz-csv'
FORMATS = (PLY_ASCII, XYZ_CSV)

_SUFFIXES = {
    '.ply': PLY_ASCII,
    '.xyz': XYZ_CSV,
    '.csv': XYZ_CSV,
}

# 17 significant digits round-trip any float64 exactly
_FLOAT_FMT = '%.17g'


def infer_format(path,
                 fmt=None):
    '''Pick a format from the file suffix unless one is given.

    Raises:
        ParseError: If the format is unknown.
    '''

    if fmt is None:
        fmt = _SUFFIXES.get(Path(path).suffix.lower())
        if fmt is None:
            raise ParseError('cannot infer cloud format from %r' % str(path))
    if fmt not in FORMATS:
        raise ParseError('unknown cloud format %r, expected one of %s' % (fmt, ', '.join(FORMATS)))
    return fmt


def _parse_float(token,
                 lineno):
    try:
        return float(token)
    except ValueError:
        raise ParseError('invalid number %r' % token, line=lineno) from None


def read_ply(path):
    '''Parse an ascii PLY file.

    Only the `vertex` x/y/z properties and the `face` vertex index list are
    interpreted; other elements are skipped by count.

    Args:
        path: The file to read.

    Returns:
        vertices: Float array of shape (N, 3), non-finite rows kept.
        faces: List of vertex index lists.
        vertex_lines: 1-based line number of each vertex row.
    '''

    try:
        with open(path, 'r', encoding='utf-8') as ply_file:
            lines = ply_file.read().splitlines()
    except OSError as exc:
        raise IoError('cannot read %s: %s' % (path, exc)) from exc

    if not lines or lines[0].strip() != 'ply':
        raise ParseError('missing "ply" magic', line=1)

    # Read the header
    elements = []
    lineno = 1
    ended = False
    while lineno < len(lines):
        line = lines[lineno].strip()
        lineno += 1
        if not line or line.startswith('comment') or line.startswith('obj_info'):
            continue
        tokens = line.split()
        if tokens[0] == 'format':
            if len(tokens) < 2 or tokens[1] != 'ascii':
                raise ParseError('only ascii PLY is supported, got %r' % line, line=lineno)
        elif tokens[0] == 'element':
            if len(tokens) != 3:
                raise ParseError('malformed element line %r' % line, line=lineno)
            try:
                count = int(tokens[2])
            except ValueError:
                raise ParseError('invalid element count %r' % tokens[2], line=lineno) from None
            elements.append((tokens[1], count, []))
        elif tokens[0] == 'property':
            if not elements:
                raise ParseError('property before any element', line=lineno)
            elements[-1][2].append(tokens[-1])
        elif tokens[0] == 'end_header':
            ended = True
            break
        else:
            raise ParseError('unexpected header line %r' % line, line=lineno)
    if not ended:
        raise ParseError('missing end_header', line=lineno)

    # Read the element rows
    vertices = np.empty((0, 3))
    vertex_lines = []
    faces = []
    for name, count, props in elements:
        rows = []
        row_lines = []
        while len(rows) < count:
            if lineno >= len(lines):
                raise ParseError('expected %d %s rows, file ended after %d' % (count, name, len(rows)),
                                 line=lineno)
            line = lines[lineno].strip()
            lineno += 1
            if not line:
                continue
            rows.append(line.split())
            row_lines.append(lineno)
        if name == 'vertex':
            try:
                cols = [props.index(axis) for axis in ('x', 'y', 'z')]
            except ValueError:
                raise ParseError('vertex element lacks x/y/z properties') from None
            vertices = np.empty((count, 3))
            for i, (tokens, row_line) in enumerate(zip(rows, row_lines)):
                if len(tokens) < len(props):
                    raise ParseError('expected %d vertex values, got %d' % (len(props), len(tokens)),
                                     line=row_line)
                for j, col in enumerate(cols):
                    vertices[i, j] = _parse_float(tokens[col], row_line)
            vertex_lines = row_lines
        elif name == 'face':
            for tokens, row_line in zip(rows, row_lines):
                try:
                    n = int(tokens[0])
                    face = [int(t) for t in tokens[1:1 + n]]
                except (ValueError, IndexError):
                    raise ParseError('malformed face row', line=row_line) from None
                if len(face) != n:
                    raise ParseError('face lists %d indices, expected %d' % (len(face), n), line=row_line)
                faces.append(face)
    return vertices, faces, vertex_lines


def _read_xyz(path):
    try:
        with open(path, 'r', encoding='utf-8') as xyz_file:
            lines = xyz_file.read().splitlines()
    except OSError as exc:
        raise IoError('cannot read %s: %s' % (path, exc)) from exc

    rows = []
    for lineno, line in enumerate(lines, start=1):
        line = line.split('#', 1)[0].strip()
        if not line:
            continue
        tokens = [t for t in line.replace(',', ' ').split()]
        if len(tokens) != 3:
            raise ParseError('expected 3 values "x,y,z", got %d' % len(tokens), line=lineno)
        rows.append([_parse_float(t, lineno) for t in tokens])
    return np.array(rows, dtype=np.float64).reshape(-1, 3)


def load_cloud(path,
               fmt=None):
    '''Read a point cloud.

    Args:
        path: The file to read.
        fmt: 'ply-ascii' or 'xyz-csv'; inferred from the suffix if None.

    Returns:
        cloud: The finite points in file order; `cloud.dropped` counts the
            non-finite rows that were skipped.

    Raises:
        ParseError: With the offending line number.
        IoError: If the file cannot be read.
    '''

    fmt = infer_format(path, fmt)
    if fmt == PLY_ASCII:
        points, _, _ = read_ply(path)
    else:
        points = _read_xyz(path)
    cloud = PointCloud(points)
    logger.info('Loaded %d points from %s (%d dropped)', len(cloud), path, cloud.dropped)
    return cloud


def write_ply(path,
              vertices,
              faces=None):
    '''Write vertices (and optional triangle faces) as ascii PLY.'''

    vertices = np.asarray(vertices, dtype=np.float64).reshape(-1, 3)
    faces = np.asarray(faces if faces is not None else np.empty((0, 3)), dtype=np.int64).reshape(-1, 3)
    header = ['ply',
              'format ascii 1.0',
              'element vertex %d' % vertices.shape[0],
              'property double x',
              'property double y',
              'property double z']
    if faces.shape[0]:
        header += ['element face %d' % faces.shape[0],
                   'property list uchar int vertex_indices']
    header.append('end_header')
    try:
        with open(path, 'w', encoding='utf-8') as ply_file:
            ply_file.write('\n'.join(header) + '\n')
            np.savetxt(ply_file, vertices, fmt=_FLOAT_FMT, delimiter=' ')
            if faces.shape[0]:
                np.savetxt(ply_file, np.hstack([np.full((faces.shape[0], 1), 3), faces]),
                           fmt='%d', delimiter=' ')
    except OSError as exc:
        raise IoError('cannot write %s: %s' % (path, exc)) from exc


def save_cloud(cloud,
               path,
               fmt=None):
    '''Write a point cloud.

    Args:
        cloud: The PointCloud.
        path: Destination file.
        fmt: 'ply-ascii' or 'xyz-csv'; inferred from the suffix if None.

    Raises:
        IoError: If the file cannot be written.
    '''

    fmt = infer_format(path, fmt)
    if fmt == PLY_ASCII:
        write_ply(path, cloud.points)
        return
    try:
        with open(path, 'w', encoding='utf-8') as xyz_file:
            xyz_file.write('# x,y,z\n')
            np.savetxt(xyz_file, cloud.points, fmt=_FLOAT_FMT, delimiter=',')
    except OSError as exc:
        raise IoError('cannot write %s: %s' % (path, exc)) from exc
