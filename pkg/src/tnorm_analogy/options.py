from dataclasses import dataclass


@dataclass(frozen=True)
class SolverOptions:
    """Tolerances and budgets shared by the 1-D solvers.

    ``tol`` is the residual under which a candidate counts as a solution,
    ``grid_steps`` the coarse scan resolution, ``max_refine`` the iteration
    cap for golden-section and bisection refinement.
    """

    tol: float = 1e-9
    grid_steps: int = 2048
    max_refine: int = 200

    def __post_init__(self):
        if not self.tol > 0:
            raise ValueError(f"tol must be > 0, got {self.tol!r}")
        if int(self.grid_steps) != self.grid_steps or self.grid_steps < 2:
            raise ValueError(f"grid_steps must be an integer >= 2, got {self.grid_steps!r}")
        if int(self.max_refine) != self.max_refine or self.max_refine < 1:
            raise ValueError(f"max_refine must be a positive integer, got {self.max_refine!r}")
