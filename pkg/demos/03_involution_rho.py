"""
The involution rho and Burstein's map
=====================================

rho keeps the first letter and the descent number, swaps maj with stat and
is its own inverse. Burstein's closed-form map does the same and also keeps
adj, which rho does not.
"""

from permstat import apply_map, burstein, rho, rho_trace

pi = "52718346"
print("i  s_i  sigma^(i)")
for step in rho_trace(pi):
    print(f"{step.i}  {step.digit:>3}  {step.labeling}")

report = apply_map("rho", pi)
print()
print(report.input, report.input_stats)
print(report.output, report.output_stats)
print("rho(rho(pi)) =", rho(rho(pi)))

pi = "543617982"
for name in ("rho", "burstein"):
    r = apply_map(name, pi)
    print(f"{name:>8}: {r.output}  adj {r.input_stats.adj} -> {r.output_stats.adj}")
print("first letter maximal, so both maps agree:", rho("978452613") == burstein("978452613"))
