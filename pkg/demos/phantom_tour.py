"""
A tour of the synthetic nodule phantoms
=======================================

Phantoms are small CT-like volumes holding one nodule whose shape
features are known exactly. They stand in for annotated scans so that
every stage of the pipeline can be exercised, and checked, on a laptop.

Run with ``python demos/phantom_tour.py``; figures land in ``demos_out/``.
"""
from pathlib import Path

import numpy as np

from xnodule.config import PHANTOM_MANIFESTATIONS
from xnodule.explain import render_overlay
from xnodule.ingest import prepare_record
from xnodule.phantom import PhantomSpec, generate_phantom

out = Path("demos_out")
out.mkdir(exist_ok=True)

# A spiculated, lobulated solid nodule with one vessel running past it.
# The phantom counts as malignant when it carries at least three spicules
# or at least two lobes, so the diagnosis is a function of its shape.
spec = PhantomSpec(radius_mm=3.0, lobulation_count=2, spicule_count=3, tube_count=1, noise_sd=25.0, seed=4)
volume, mask, record = generate_phantom(spec, (32, 32, 24))
print("grid", volume.voxels.shape, "spacing", volume.spacing)
print("diagnosis:", record.diagnosis_label.value)
print("manifestations:", record.manifestation_labels)
print("nodule voxels:", int(mask.sum()), "equivalent diameter %.1f mm" % record.diameter_mm)

# The HU values follow the usual landmarks: air around -1000, soft tissue
# near 0, the bone wall slab far above.
print("HU range %.0f .. %.0f" % (volume.voxels.min(), volume.voxels.max()))

# Ingest turns the volume into a normalized patch centred on the nodule,
# exactly as it would for a real scan.
prepared = prepare_record(record, volume, PHANTOM_MANIFESTATIONS, "train", volume.spacing,
                          patch_size=(24, 24, 16), mask=mask)
patch = prepared.patch
print("patch", patch.shape, "range [%.2f, %.2f]" % (patch.min(), patch.max()))

# Overlay the true mask as if it were an activation map, in all three views.
for view in ("axial", "sagittal", "coronal"):
    render_overlay(patch, prepared.mask.astype(float), out / f"phantom_mask_{view}.png", view=view, scale=8)

# Flip one flag at a time and watch the labels follow.
for change in (dict(calcified=True), dict(spicule_count=2), dict(spicule_count=2, lobulation_count=1)):
    s = PhantomSpec(**{**spec.__dict__, **change})
    print(change, "->", s.diagnosis().value, s.labels())

# Averaging many noisy draws of the same spec recovers the noise-free volume.
clean, _, _ = generate_phantom(PhantomSpec(**{**spec.__dict__, "noise_sd": 0.0}), (32, 32, 24))
draws = [generate_phantom(PhantomSpec(**{**spec.__dict__, "seed": k}), (32, 32, 24))[0].voxels
         for k in range(16)]
print("mean |noisy average - clean| = %.2f HU" % np.abs(np.mean(draws, 0) - clean.voxels).mean())
