"""
Ablation table
==============

``ablate`` expands one configuration into the SIFA-lite baseline, Model 0 (no image
discriminators) and one SynthMix run per mask resolution, trains each for every seed and
writes the comparison as Markdown, CSV and JSON. Finished runs are cached, so re-running
only trains what is missing.

The iteration count here is tiny so the script finishes in a few minutes; the numbers only
show the table layout. ``tests/test_acceptance.py`` runs the full-length version.
"""

from pathlib import Path

from synthmix.dataio import ToyDatasetSpec, generate_toy_dataset
from synthmix.harness.ablate import ablate
from synthmix.harness.config import NetSize, RunConfig

out = Path(__file__).parent / "output" / "ablation_demo"
data = out / "data"
if not (data / "manifest.json").exists():
    generate_toy_dataset(ToyDatasetSpec(n_train=40, n_test=10, image_side=64, seed=0), data)

config = RunConfig(dataset=str(data), iterations=150, eval_interval=150, net=NetSize(4, 2, 4, 4))
rows = ablate(config, [4, 8, 16], out, seeds=[0, 1])
print((out / "table.md").read_text())
