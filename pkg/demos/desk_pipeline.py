"""
The whole pipeline at desk scale
================================

Generates a phantom cohort, trains the segmenter and the multi-task
classifier, evaluates on the test split and renders activation overlays.
This is what ``xnodule run --preset desk`` does; the budgets below are
cut further so the script finishes in a few minutes on one core.
"""
import json
import sys
from pathlib import Path

from xnodule.config import apply_overrides, desk_scale
from xnodule.pipeline import run_pipeline, stage_status

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demos_out/desk_run")
config = apply_overrides(desk_scale(seed=0, out=str(out)), [
    "phantom.count=80", "segmenter.max_epochs=15", "schedule.phase1_max_epochs=6", "schedule.max_epochs=10",
    "evaluation.n_boot=500",
])

root = run_pipeline(config)
print((root / "report.txt").read_text())

# Each stage left a record keyed on its configuration and its upstream stage.
for stage, key in stage_status(root).items():
    print(f"{stage:9s} {key[:12]}")

# Running again is free: every stage key matches, so nothing is recomputed.
run_pipeline(config)

# Per task: (predicted probability, share of the hottest 1% of voxels on the nodule).
scores = json.loads((root / "explain" / "localization.json").read_text())
for rid, tasks in scores.items():
    print(rid, {t: (round(v["probability"], 2), round(v["localization_score"], 2)) for t, v in tasks.items()})
print("overlays:", len(list((root / "explain").glob("*.png"))), "PNG files in", root / "explain")
