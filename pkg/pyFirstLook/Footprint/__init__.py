from .Camera import (CameraModel, FootprintRect, overlap_steps, view_distance_deviation,
                     project_footprint, lateral_overlap_fraction, check_orthonormal)
