"""Static plan, reflection matrix and priority sets for the Zigzag C network."""
import numpy as np

from dynmatch.catalog import load_instance
from dynmatch.policies import build_priority_sets
from dynmatch.spp import solve_spp

inst = load_instance("zigzag-c")
net = inst.network
sol = solve_spp(net)
print("status", sol.status)
print("x* =", np.round(sol.x, 4))
print("matching value", float(net.match_values @ sol.x))

plan = inst.plan
print("basic activities   ", plan.basic + 1)
print("nonbasic activities", plan.nonbasic + 1)
print("reflection matrix H (classes x basic):")
print(plan.H.astype(int))

# priority sets used by the static-priority benchmark; the last one holds nonbasic activities
for h, s in enumerate(build_priority_sets(net, plan)):
    print(f"set {h}:", np.asarray(s) + 1)
