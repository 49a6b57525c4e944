from .Planner import (EgoFrame, PlannerConfig, PlanStep, Observation, TickResult, FirstLookPlanner,
                      compute_frame, frame_yaw, next_view_pose, predict_path, plan_tick)
