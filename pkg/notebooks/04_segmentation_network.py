"""
Two streams, four guided fusions
================================

The content image runs through a deep stream and the texture image through a
thin one. At each stage the two are concatenated, instance-normalised, and a
small contour detector gates the texture features before they are merged back.
"""
import numpy as np

from texshield import tfg
from texshield.autograd import Tensor
from texshield.hggn import HGGN, BackboneConfig
from texshield.losses import extract_contour_gt, stage_targets
from texshield.pipeline import build_loss, to_nchw
from texshield.synth import default_domains, make_sample

scene = make_sample(default_domains()["source"], seed=11, size=64)
res = tfg.solve_wls(tfg.GuidedImage(scene.image), 1.5, method="direct")
net = HGGN(np.random.default_rng(0), BackboneConfig())
out = net(Tensor(to_nchw(res.content).astype(np.float32)), Tensor(to_nchw(res.texture).astype(np.float32)))

print("logits:", out.logits.shape)
for k, y in enumerate(out.contours, 1):
    print(f"contour map {k}: {y.shape[2:]}, values in ({y.data.min():.3f}, {y.data.max():.3f})")

# %%
# Contour targets come from the label map and are max-pooled to each stage.
full = extract_contour_gt(scene.labels)
print("contour pixels:", full.n_pos, "beta:", round(full.beta, 3))
print("per stage:", [t.n_pos for t in stage_targets(scene.labels)])

# %%
# Segmentation loss plus 2.5 times the contour losses.
bundle = build_loss(out, scene.labels[None], alpha=2.5)
print(f"seg {bundle.seg_loss:.4f} + 2.5 * {bundle.contour_total:.4f} = {bundle.total:.4f}")
