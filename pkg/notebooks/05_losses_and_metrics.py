"""
Losses and mIoU by hand
=======================
"""
import numpy as np

from texshield import losses as L

# %%
# Class-balanced cross-entropy: one contour pixel out of four, y = 0.5
# everywhere. beta = 3/4 weights the contour term.
t = L.ContourTarget.from_mask(np.array([[True, False], [False, False]]))
print("beta", t.beta, "loss", L.contour_loss(np.full((2, 2), 0.5), t), "=", 1.5 * np.log(2))

# %%
# Uniform logits cost ln C per pixel.
print("seg loss, C=4:", L.seg_loss(np.zeros((1, 4, 2, 2)), np.zeros((1, 2, 2), int)), "=", np.log(4))

# %%
# mIoU from a confusion matrix. Classes absent from both maps are skipped.
gt = np.array([[0, 0], [1, 1]])
pred = np.array([[0, 1], [1, 1]])
ious, m = L.miou(pred, gt, num_classes=3)
print("IoU per class", ious, "mIoU", round(m, 4))

# Tiles merge by adding their matrices.
a = L.ConfusionMatrix(3).add(pred[:1], gt[:1])
b = L.ConfusionMatrix(3).add(pred[1:], gt[1:])
print("tile sum equals whole:", np.array_equal((a + b).counts, L.ConfusionMatrix(3).add(pred, gt).counts))
