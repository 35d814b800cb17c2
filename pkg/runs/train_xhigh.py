import logging, sys
from dynmatch.catalog import load_instance
from dynmatch.bsde import train
logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
seed = int(sys.argv[1]); M = int(sys.argv[2])
tag = f"x-high-s{seed}-M{M}"
cfg = load_instance("x-high").trainer_config(iterations=M, seed=seed, checkpoint_path=f"/root/pkg/runs/{tag}.npz",
                     telemetry_path=f"/root/pkg/runs/{tag}.jsonl")
train(cfg)
