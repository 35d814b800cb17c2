"""Train value and gradient networks briefly on X-high, then simulate the proposed policy.

A few hundred iterations only shows the mechanics; the policy needs about
20000 iterations before it competes with static priority.
"""
import sys

from dynmatch.bsde import train
from dynmatch.catalog import load_instance
from dynmatch.experiments import compare

iters = int(sys.argv[1]) if len(sys.argv) > 1 else 300
inst = load_instance("x-high")
model = train(inst.trainer_config(iters, seed=0, batch_size=64))
print(f"{model.iteration} iterations, ema loss {model.ema_history[0]:.4f} -> {model.ema_history[-1]:.4f}")

policies = inst.benchmarks(["static_priority"]) + inst.proposed(model)
print(compare(inst, policies, inst.sim_config(replications=5, seed=0)).render())
