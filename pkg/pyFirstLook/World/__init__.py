from .Mesh import SurfaceMesh, KINDS, surface_params, make_surface, recede_face, sample_surface, load_mesh, save_mesh
from .Lidar import LidarModel, ray_directions, cast_rays, cast_ray_bruteforce, scan
from .Vehicle import VehicleModel, vehicle_step, track
