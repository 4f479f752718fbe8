"""
Mix masks and the five Inspector/generator inputs
=================================================

A k x k Bernoulli grid is drawn, blown up to pixels by block replication and used to
splice two images. Mask value 1 takes the pixel from the target-appearance image.

For illustration the "translations" are the paired renderings of the same anatomy in the
other modality, which the toy benchmark provides for its test cases.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from synthmix.dataio import ToyDatasetSpec, generate_toy_dataset, load_eval_label, load_manifest, load_sample
from synthmix.maskgen import MixMaskSpec, generate_grid, upsample
from synthmix.mixer import Domain, Kind, Sample, compose_iteration

out = Path(__file__).parent / "output"
out.mkdir(exist_ok=True)

# a small two-modality dataset (source: bright organs on dark; target: inverted, textured)
root = out / "toy64"
if not (root / "manifest.json").exists():
    generate_toy_dataset(ToyDatasetSpec(n_train=8, n_test=4, image_side=64, seed=0), root)
man = load_manifest(root)

###############################################################################
# A mask at resolution k=8 with ones-ratio 0.5, and its pixel version
spec = MixMaskSpec(k=8, lambda_ratio=0.5, image_side=64, seed=0)
grid = generate_grid(spec, draw=0)
print("ones fraction of this grid:", grid.mean())
print("pixel mask shape:", upsample(grid, 64).values.shape)

###############################################################################
# Compose one iteration. Source and target are unrelated cases; the aligned
# translations share anatomy with the image they are mixed with.
src_id, other_id = man.ids("source", "test")[:2]
tgt_id = "t" + other_id[1:]
src = load_sample(man, src_id)
tgt = load_sample(man, tgt_id)
s2t = Sample(load_sample(man, "t" + src_id[1:]).image, Domain.SYNTH_TARGET, src.seg_label, src_id)
t2s = Sample(load_sample(man, other_id).image, Domain.SYNTH_SOURCE, None, tgt_id)
batch = compose_iteration(src, tgt, s2t, t2s, spec, draw=0)

kinds = [Kind.SRC, Kind.TGT, Kind.UNALIGNED_MIX, Kind.S_MIX, Kind.T_MIX]
fig, axes = plt.subplots(2, 5, figsize=(12, 5))
for col, kind in enumerate(kinds):
    sample, = batch.by_kind(kind)
    axes[0, col].imshow(sample.image, cmap="gray", vmin=-1, vmax=1)
    axes[0, col].set_title(kind.name)
    axes[1, col].imshow(sample.patch_domain_labels, cmap="coolwarm", vmin=0, vmax=1)
    axes[1, col].set_title(f"patch labels (mean {sample.domain_fraction:.2f})", fontsize=8)
for ax in axes.ravel():
    ax.axis("off")
fig.tight_layout()
fig.savefig(out / "masks_and_mixes.png", dpi=80)

###############################################################################
# The aligned source mix keeps the source label regardless of the mask
s_mix, = batch.by_kind(Kind.S_MIX)
print("S_MIX label equals source label:", np.array_equal(s_mix.seg_label, load_eval_label(man, src_id)))
print("Inspector inputs:", [s.kind.name for s in batch.inspector_inputs])
print("generator inputs:", [s.kind.name for s in batch.generator_inputs])
