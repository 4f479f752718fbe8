"""
Training a Mixup Inspector on real images and unaligned mixes
=============================================================

The Inspector maps an image to a k x k grid of patch decisions (1 = target appearance)
plus one global score. Here it is trained for a few hundred steps on real source, real
target and unaligned mixes, then asked to read back the mask of a fresh mix.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np
import torch

from synthmix.dataio import ToyDatasetSpec, generate_toy_dataset, load_manifest, load_split
from synthmix.inspector import InspectorConfig, MixupInspector, inspector_loss, patch_accuracy
from synthmix.maskgen import MixMaskSpec, generate_grid, upsample
from synthmix.mixer import mix_images

torch.manual_seed(0)
torch.set_num_threads(1)
out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)
root = out / "toy64_train"
if not (root / "manifest.json").exists():
    generate_toy_dataset(ToyDatasetSpec(n_train=40, n_test=4, image_side=64, seed=1), root)
man = load_manifest(root)
src, tgt = load_split(man, "source", "train"), load_split(man, "target", "train")

k = 8
inspector = MixupInspector(InspectorConfig(k=k, image_side=64, base_channels=16))
opt = torch.optim.Adam(inspector.parameters(), lr=1e-3, betas=(0.5, 0.999))
spec = MixMaskSpec(k, 0.5, 64, seed=3)
rng = np.random.default_rng(0)

###############################################################################
# One step = [source, target, unaligned mix] with patch and global targets
for step in range(600):
    s, t = src[rng.integers(len(src))], tgt[rng.integers(len(tgt))]
    grid = generate_grid(spec, step)
    mixed = mix_images(upsample(grid, 64), t.image, s.image)
    x = torch.as_tensor(np.stack([s.image, t.image, mixed]))
    labels = np.stack([np.zeros((k, k)), np.ones((k, k)), grid.cells])
    loss = inspector_loss(inspector(x), labels, labels.mean(axis=(1, 2)))
    opt.zero_grad()
    loss.backward()
    opt.step()
    if (step + 1) % 200 == 0:
        print(f"step {step + 1}: L_cls {loss.item():.3f}")

###############################################################################
# Read back a held-out mask
grid = generate_grid(spec, 10_000)
mixed = mix_images(upsample(grid, 64), tgt[0].image, src[0].image)
with torch.no_grad():
    out_i = inspector(torch.as_tensor(mixed)[None])
print(f"patch accuracy on a held-out mix: {patch_accuracy(out_i, grid.cells[None]):.2f}")
fig, axes = plt.subplots(1, 3, figsize=(8, 3))
axes[0].imshow(mixed, cmap="gray")
axes[0].set_title("unaligned mix")
axes[1].imshow(grid.cells, cmap="coolwarm", vmin=0, vmax=1)
axes[1].set_title("true mask")
axes[2].imshow(torch.sigmoid(out_i.patch_logits[0]).numpy(), cmap="coolwarm", vmin=0, vmax=1)
axes[2].set_title("Inspector P(target)")
for ax in axes:
    ax.axis("off")
fig.savefig(out / "inspector.png", dpi=80)
