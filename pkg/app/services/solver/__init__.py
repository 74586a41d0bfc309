from app.services.solver.bounds import chi_la_bounds
from app.services.solver.exact import SolveResult, chi_la_exact
from app.services.solver.oracle import naive_chi_la

__all__ = ["SolveResult", "chi_la_bounds", "chi_la_exact", "naive_chi_la"]
