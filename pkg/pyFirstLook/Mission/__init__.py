from .Mission import (Phase, StepMode, LandmarkRoute, MissionSettings, MissionContext, MissionExecutive,
                      advance_landmarks, select_step, commit_step, mission_reference, locality_distance,
                      boundary_passed)
