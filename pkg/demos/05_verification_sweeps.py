"""The two inequality sweeps behind the command-line verify commands.

verify-main checks every residue-class deviation of the exact descent law
against its closed-form bound; verify-tp checks the total variation distance
to the translated Poisson.  Both are exact (or certified) on the left side
and closed-form on the right, so a negative margin anywhere is a real
counterexample, not noise.
"""

from eulermod.cli import verify_main_report, verify_tp_report

print("Modular sweep: n = 6..30, moduli {2, 3, 5, n}:")
report = verify_main_report(6, 30, ("2", "3", "5", "n"))
print(f"  rows checked : {len(report.rows)}")
print(f"  all pass     : {report.all_pass}")
tightest = min(report.rows, key=lambda r: r.margin)
params = dict(tightest.params)
print(f"  tightest row : n={params['n']} b={params['b']} k={params['k']}"
      f"  lhs={tightest.lhs:.6f} rhs={tightest.rhs:.6f} margin={tightest.margin:.6f}")

print()
print("Translated Poisson sweep:")
report = verify_tp_report([45, 60, 80, 100, 150, 200])
for row in report.rows:
    params = dict(row.params)
    print(f"  n={params['n']:3d}: tv={row.lhs:.6f}  bound={row.rhs:.6f}"
          f"  margin={row.margin:.6f}  pass={row.passed}")

print()
print("The same sweeps are available from the shell:")
print("  eulermod verify-main --n-min 6 --n-max 60 --b 2,3,5,12,n")
print("  eulermod verify-tp --n 45,100,200 --format json")
print("(exit code 0 means every row passed)")
