from .Scenario import Scenario, parse_scenario, build_world
from .Runner import RunResult, ObservedCloud, EXIT_CODES, run_mission, replay
from .Plot import plot_run
from .Main import main
