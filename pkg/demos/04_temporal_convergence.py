"""Observed second-order convergence of the Crank-Nicolson time stepping.

With a fine mesh (N = 1000) the spatial error is negligible, so halving dt
must cut the L2 error by a factor of four.
"""

from hermite_heat import (
    RunConfig,
    build_mesh,
    control_problem,
    convergence_order,
    error_norms,
    legendre_rule,
    run,
)

problem = control_problem()
rule = legendre_rule()
mesh = build_mesh(problem, 1000)

sweep = []
for dt in (0.01, 0.005, 0.0025):
    cfg = RunConfig(dt=dt, t_final=1.0, n_elements=1000, rule=rule)
    final = run(problem, cfg)
    l2, _ = error_norms(problem, mesh, rule, final, 1.0)
    sweep.append((dt, l2))
    print(f"dt = {dt:<7} L2 = {l2:.4e}")

orders = convergence_order(sweep)
print("observed orders:", [f"{o:.3f}" for o in orders])
