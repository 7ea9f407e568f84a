"""
A short training run and the stored ablations
=============================================

Trains a reduced model for a few hundred iterations, evaluates it on the
source and texture-shifted target domains, then summarises the 3000-iteration
ablations in results/ if they exist (scripts/reproduce_ablations.sh).
"""
import glob
import os
import time

from texshield import harness
from texshield.config import RunConfig
from texshield.report import report

cfg = RunConfig(iterations=200, n_train=40, n_val=10, stage_channels=(8, 16, 32, 64),
                texture_channels=(2, 4, 8, 16), checkpoint_every=0)
t0 = time.perf_counter()
res = harness.train(cfg)
print(f"trained {cfg.iterations} iterations in {time.perf_counter() - t0:.0f} s; "
      f"loss {res.losses[0][3]:.3f} -> {res.losses[-1][3]:.3f}")

scores = harness.evaluate(res.pipeline, harness.val_sets(cfg))
for domain, (_, m) in scores.items():
    print(f"{domain:8s} mIoU {m:.3f}")

# %%
root = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "results")
paths = sorted(glob.glob(os.path.join(root, "*", "ablation_*.csv")))
if paths:
    print(report(paths)[0])
else:
    print("no stored ablations; run scripts/reproduce_ablations.sh")
