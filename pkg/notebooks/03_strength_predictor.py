"""
Predicting the smoothing strength
=================================

Three conv layers extract features whose per-channel mean and variance feed
a linear head. Softplus keeps the raw output non-negative; training adds
truncated normal noise before clamping to [0, 4].
"""
import numpy as np

from texshield import asp
from texshield.synth import default_domains, make_sample

rng = np.random.default_rng(0)
model = asp.AspModel(rng)

doms = default_domains()
batch = np.stack([make_sample(doms[d], 5, 64).image for d in ("source", "grating", "speckle", "flat")])
x = batch.transpose(0, 3, 1, 2)

# %%
# Style statistics of the shallow features: 32 means and 32 variances.
stats = asp.extract_stats(model.features(asp.Tensor(x.astype(np.float32))))
print("stats vector:", stats.vector().shape)

# %%
# Eval mode is deterministic; train mode jitters within +-1.5.
pred = asp.predict_lambda(model, x, "eval")
print("eval lambda:", pred.lambda_a.round(3))
noisy = asp.predict_lambda(model, x, "train", np.random.default_rng(1))
print("train noise:", noisy.noise.round(3), "-> lambda", noisy.lambda_a.round(3))

eps = asp.truncated_normal(np.random.default_rng(2), 10_000)
print(f"10^4 noise draws: max |eps| = {np.abs(eps).max():.3f}, mean = {eps.mean():+.4f}")
