import json, logging
from pathlib import Path
from dynmatch.catalog import load_instance
from dynmatch.bsde import train
from dynmatch.mlp import LRSchedule
logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")
inst = load_instance("dim24-i")
full = LRSchedule.from_list(inst.settings["lr_schedule"])
tel = Path("/root/pkg/runs/dim24-i-s0-M5000.jsonl"); tel.unlink(missing_ok=True)
train(inst.trainer_config(5000, 0, schedule=LRSchedule((0, 5000), (full.rate(0),)), telemetry_path=str(tel),
                          checkpoint_path="/root/pkg/runs/dim24-i-s0-M5000.npz"))
