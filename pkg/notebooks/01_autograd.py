"""
Reverse-mode autodiff on small tensors
======================================

Build a tiny conv net from the primitives, run backward, and check the
gradients against central differences.
"""
import numpy as np

from texshield import autograd as ag
from texshield.autograd import Tensor
from texshield.nn import SGD, Conv2d, grad_check, promote

rng = np.random.default_rng(0)

# %%
# An all-ones 3x3 kernel on an all-ones image sums nine pixels at the centre.
x = Tensor(np.ones((1, 1, 3, 3)))
w = Tensor(np.ones((1, 1, 3, 3)))
print("centre of ones * ones:", ag.conv2d(x, w, padding=1).data[0, 0, 1, 1])

# %%
# Instance norm maps [1, 2, 3, 4] to zero mean, unit variance.
v = Tensor(np.array([1.0, 2.0, 3.0, 4.0]).reshape(1, 1, 2, 2))
print("instance norm:", ag.instance_norm(v, eps=0.0).data.ravel().round(4))

# %%
# A conv -> relu -> pool -> mean graph. backward() walks it in reverse
# topological order and leaves gradients on the leaves only.
conv = promote(Conv2d(rng, 3, 4, 3))
img = Tensor(rng.standard_normal((2, 3, 8, 8)))
loss = ag.tmean(ag.maxpool2d(ag.relu(conv(img)), 2))
loss.backward()
print("loss", float(loss.data), "| grad norm on conv weight", np.linalg.norm(conv.weight.grad))

# %%
# Finite differences at float64 agree with the tape.
err = grad_check(lambda p: ag.tmean(ag.maxpool2d(ag.relu(conv(img)), 2)), [conv.weight, conv.bias], h=1e-6)
print("worst relative gradient error:", f"{err:.1e}")

# %%
# One SGD step with momentum and weight decay.
opt = SGD(conv.parameters(), lr=0.1)
before = conv.weight.data.copy()
opt.step()
print("weight change:", np.abs(conv.weight.data - before).max())
