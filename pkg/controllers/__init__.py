"""Controllers orchestrating check runs over many quivers."""

from controllers.sweep_controller import SweepController

__all__ = ["SweepController"]
