"""Five benchmark policies on the X network under common random numbers.

A short run (20 replications) so it finishes in about a minute; the catalog
default is 100.
"""
import numpy as np

from dynmatch.catalog import load_instance
from dynmatch.experiments import compare

inst = load_instance("x-high")
report = compare(inst, inst.benchmarks(), inst.sim_config(replications=20, seed=0))
print(report.render())

# greedy-basic never touches the two nonbasic activities
usage = report.row("greedy_basic").usage
print("greedy-basic nonbasic usage:", usage[inst.plan.nonbasic])
