from .Errors import FirstLookError
from .Core import Pose, PointCloud, KdIndex, load_cloud, save_cloud
from .Footprint import CameraModel, overlap_steps
from .Planner import PlannerConfig, FirstLookPlanner, compute_frame, next_view_pose, predict_path
from .Mission import Phase, StepMode, LandmarkRoute, MissionSettings, MissionExecutive
from .World import SurfaceMesh, LidarModel, VehicleModel, make_surface, scan
from .Metrics import CoverageGrid, RunLog, MetricsReport, cloud_to_cloud, run_report
from .Cli import Scenario, parse_scenario, run_mission, replay

__version__ = '1.0.0'
