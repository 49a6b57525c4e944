from .Compare import HIST_BIN, HIST_MAX, TRIM_PERCENTILE, CloudToCloud, cloud_to_cloud
from .Coverage import CoverageGrid, update_coverage, ground_truth_voxels, coverage_fraction
from .RunLog import TickRecord, RunLog
from .Report import ReportConfig, MetricsReport, overlap_fractions, run_report, write_report
