# -*- coding=utf-8 -*-

import math

import numpy as np
import pytest

from pyFirstLook.Core import (PointCloud, Pose, build_index, downsample, linear_scan_nn, load_cloud,
                              nearest_neighbor, save_cloud, wrap_angle)
from pyFirstLook.Errors import EmptyCloud, InvalidTarget, IoError, ParseError, ValidationError


def test_singleton_index():
    index = build_index(PointCloud([[1.0, 2.0, 3.0]]))
    point, dist, point_id = nearest_neighbor(index, (7.0, -4.0, 0.5))
    assert point.tolist() == [1.0, 2.0, 3.0]
    assert point_id == 0
    assert dist == pytest.approx(math.sqrt(36 + 36 + 6.25))


def test_empty_cloud_index():
    with pytest.raises(EmptyCloud):
        build_index(PointCloud())


def test_nearest_neighbor_basic():
    index = build_index(PointCloud([[0.0, 0.0, 0.0], [10.0, 0.0, 0.0]]))
    point, dist, point_id = nearest_neighbor(index, (1.0, 0.0, 0.0))
    assert point.tolist() == [0.0, 0.0, 0.0]
    assert dist == 1.0
    assert point_id == 0


def test_tie_breaks_on_lowest_index():
    cloud = PointCloud([[5.0, 0.0, 0.0], [-1.0, 0.0, 0.0], [1.0, 0.0, 0.0]])
    _, dist, point_id = nearest_neighbor(build_index(cloud), (0.0, 0.0, 0.0))
    assert dist == 1.0
    assert point_id == 1


def test_index_matches_linear_scan():
    rng = np.random.default_rng(42)
    cloud = PointCloud(rng.uniform(0.0, 100.0, size=(10000, 3)))
    index = build_index(cloud)
    queries = rng.uniform(-10.0, 110.0, size=(10000, 3))
    batch_dist, batch_ids = index.query_batch(queries)
    for k, query in enumerate(queries):
        point, dist, point_id = index.query(query)
        ref_point, ref_dist, ref_id = linear_scan_nn(cloud, query)
        assert point_id == ref_id == batch_ids[k]
        assert dist == ref_dist == batch_dist[k]
        assert np.array_equal(point, ref_point)


def test_query_batch_breaks_wide_ties_on_lowest_index():
    # Eight points at distance 1 from the origin, more than the batch candidate count
    ring = [[1.0, 0.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, -1.0, 0.0],
            [0.0, 0.0, 1.0], [0.0, 0.0, -1.0], [1.0, 0.0, 0.0], [0.0, 0.0, -1.0]]
    cloud = PointCloud([[3.0, 3.0, 3.0]] * 5 + ring[::-1])
    index = build_index(cloud)
    queries = np.vstack([np.zeros((1, 3)), np.random.default_rng(3).uniform(-2.0, 2.0, size=(50, 3))])
    distances, ids = index.query_batch(queries)
    assert distances[0] == 1.0
    assert ids[0] == 5
    for query, point_id in zip(queries, ids):
        assert point_id == linear_scan_nn(cloud, query)[2]


def test_index_matches_linear_scan_with_duplicates():
    # Integer lattice: many exact ties
    rng = np.random.default_rng(5)
    cloud = PointCloud(rng.integers(0, 4, size=(300, 3)).astype(float))
    index = build_index(cloud)
    for query in rng.integers(0, 4, size=(200, 3)) + rng.choice([0.0, 0.5], size=(200, 3)):
        assert index.query(query)[2] == linear_scan_nn(cloud, query)[2]


def test_query_batch_matches_single_queries():
    rng = np.random.default_rng(3)
    cloud = PointCloud(rng.normal(size=(500, 3)))
    index = build_index(cloud)
    queries = rng.normal(size=(50, 3))
    distances, ids = index.query_batch(queries)
    for q, d, i in zip(queries, distances, ids):
        _, ref_dist, ref_id = linear_scan_nn(cloud, q)
        assert i == ref_id
        assert d == ref_dist


def test_index_does_not_mutate_cloud():
    rng = np.random.default_rng(1)
    cloud = PointCloud(rng.normal(size=(100, 3)))
    before = cloud.points.copy()
    index = build_index(cloud)
    index.query((0.0, 0.0, 0.0))
    index.query_batch(rng.normal(size=(10, 3)))
    assert np.array_equal(cloud.points, before)
    assert not cloud.points.flags.writeable


def test_non_finite_points_dropped():
    cloud = PointCloud([[0.0, 0.0, 0.0], [np.nan, 0.0, 0.0], [1.0, np.inf, 2.0], [3.0, 4.0, 5.0]])
    assert len(cloud) == 2
    assert cloud.dropped == 2


def test_pose_yaw_wrapped_and_attitude_null():
    pose = Pose((1.0, 2.0, 3.0), 2.0 * math.pi + 1.0)
    assert pose.yaw == pytest.approx(1.0)
    assert pose.position.tolist() == [1.0, 2.0, 3.0]
    assert pose.roll == 0.0 and pose.pitch == 0.0
    assert Pose((0, 0, 0), -math.pi).yaw == pytest.approx(math.pi)


def test_pose_rejects_non_finite():
    with pytest.raises(ValidationError):
        Pose((0.0, np.nan, 0.0))
    with pytest.raises(ValidationError):
        Pose((0.0, 0.0, 0.0), math.inf)


@pytest.mark.parametrize('angle, expected', [
    (0.0, 0.0),
    (math.pi, math.pi),
    (-math.pi, math.pi),
    (2.5 * math.pi, 0.5 * math.pi),
    (-0.75 * math.pi, -0.75 * math.pi),
])
def test_wrap_angle(angle, expected):
    assert wrap_angle(angle) == pytest.approx(expected)


def test_load_xyz_in_order(tmp_path):
    path = tmp_path / 'three.xyz'
    path.write_text('# x,y,z\n1,2,3\n4,5,6\n7,8,9\n')
    cloud = load_cloud(path, 'xyz-csv')
    assert cloud.points.tolist() == [[1, 2, 3], [4, 5, 6], [7, 8, 9]]


def test_load_xyz_drops_nan_row(tmp_path):
    path = tmp_path / 'nan.csv'
    path.write_text('nan,0,0\n1,1,1\n')
    cloud = load_cloud(path)
    assert len(cloud) == 1
    assert cloud.dropped == 1


def test_load_ply_two_vertices(tmp_path):
    path = tmp_path / 'two.ply'
    path.write_text('ply\nformat ascii 1.0\nelement vertex 2\nproperty float x\nproperty float y\n'
                    'property float z\nend_header\n0 0 0\n1 2 3\n')
    cloud = load_cloud(path, 'ply-ascii')
    assert cloud.points.tolist() == [[0, 0, 0], [1, 2, 3]]


def test_load_ply_reports_line(tmp_path):
    path = tmp_path / 'bad.ply'
    path.write_text('ply\nformat ascii 1.0\nelement vertex 2\nproperty float x\nproperty float y\n'
                    'property float z\nend_header\n0 0 0\n1 oops 3\n')
    with pytest.raises(ParseError) as info:
        load_cloud(path)
    assert info.value.line == 9


def test_load_ply_truncated(tmp_path):
    path = tmp_path / 'short.ply'
    path.write_text('ply\nformat ascii 1.0\nelement vertex 3\nproperty float x\nproperty float y\n'
                    'property float z\nend_header\n0 0 0\n')
    with pytest.raises(ParseError):
        load_cloud(path)


def test_load_rejects_binary_ply(tmp_path):
    path = tmp_path / 'bin.ply'
    path.write_text('ply\nformat binary_little_endian 1.0\nelement vertex 0\nend_header\n')
    with pytest.raises(ParseError):
        load_cloud(path)


def test_load_missing_file(tmp_path):
    with pytest.raises(IoError):
        load_cloud(tmp_path / 'missing.ply')


@pytest.mark.parametrize('suffix', ['.ply', '.xyz'])
def test_save_load_round_trip(tmp_path, suffix):
    rng = np.random.default_rng(11)
    cloud = PointCloud(rng.normal(scale=1e3, size=(100, 3)))
    path = tmp_path / ('cloud' + suffix)
    save_cloud(cloud, path)
    assert np.array_equal(load_cloud(path).points, cloud.points)


def test_save_load_million_points(tmp_path):
    rng = np.random.default_rng(21)
    cloud = PointCloud(rng.uniform(-500.0, 500.0, size=(1000000, 3)))
    path = tmp_path / 'large.ply'
    save_cloud(cloud, path)
    assert path.stat().st_size > 0
    assert np.array_equal(load_cloud(path).points, cloud.points)


def test_save_empty_cloud(tmp_path):
    path = tmp_path / 'empty.ply'
    save_cloud(PointCloud(), path)
    assert 'element vertex 0' in path.read_text()
    assert len(load_cloud(path)) == 0


def test_downsample_small_cloud_unchanged():
    cloud = PointCloud(np.arange(30.0).reshape(10, 3))
    assert downsample(cloud, 20) is cloud


def test_downsample_deterministic():
    rng = np.random.default_rng(0)
    cloud = PointCloud(rng.uniform(size=(1000, 3)))
    a = downsample(cloud, 100, seed=9)
    b = downsample(cloud, 100, seed=9)
    assert len(a) == 100
    assert np.array_equal(a.points, b.points)


def test_downsample_preserves_bounding_box():
    rng = np.random.default_rng(2)
    cloud = PointCloud(rng.uniform(0.0, 10.0, size=(20000, 3)))
    low, high = downsample(cloud, 2000, seed=4).bounds()
    assert np.all(low < 0.5)
    assert np.all(high > 9.5)


@pytest.mark.parametrize('target', [0, -3, 2.5])
def test_downsample_invalid_target(target):
    with pytest.raises(InvalidTarget):
        downsample(PointCloud([[0.0, 0.0, 0.0]]), target)
