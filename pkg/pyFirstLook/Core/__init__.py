from .Geometry import (Pose, PointCloud, KdIndex, as_vec3, wrap_angle, point_distances,
                       build_index, nearest_neighbor, linear_scan_nn, downsample)
from .CloudIO import PLY_ASCII, XYZ_CSV, load_cloud, save_cloud, read_ply, write_ply
