from .registry import COMPUTATIONS, REGISTRY, run_computation
from .report import Report, run_all

__all__ = ["COMPUTATIONS", "REGISTRY", "Report", "run_all", "run_computation"]
