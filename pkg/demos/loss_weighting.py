"""
How the two training phases weight their tasks
==============================================

Phase 1 trains the manifestation pathway alone and records one validation
AUC per manifestation. Phase 2 then weights each manifestation loss by the
reciprocal of that AUC, so attributes the network found hard pull harder.
Checkpoints are ranked by a selection score that adds the diagnosis AUC
to the mean manifestation AUC.
"""
import numpy as np
import torch

from xnodule.losses import LossWeights, selection_score, total_loss, weights_from_phase1_auc

# Published phase-1 AUCs for calcification, texture, subtlety, sphericity and margin.
aucs = (0.7, 0.9, 0.9, 0.7, 0.8)
weights = weights_from_phase1_auc(aucs)
print("phase-1 AUCs :", aucs)
print("loss weights :", np.round(weights.w, 4))

# The weighted objective is linear in every weight: raising w_i by one adds L_i.
l_diag = torch.tensor(0.45, dtype=torch.float64)
l_manif = [torch.tensor(v, dtype=torch.float64) for v in (0.60, 0.30, 0.35, 0.55, 0.40)]
base = float(total_loss(l_diag, l_manif, weights))
bumped = list(weights.w)
bumped[0] += 1.0
print("L =", round(base, 6), "; L after w_0 += 1 minus L =",
      round(float(total_loss(l_diag, l_manif, LossWeights(tuple(bumped)))) - base, 6), "(L_0 = 0.6)")

# A degenerate phase-1 AUC of 0.5 (chance) doubles the weight; the trainer
# floors worse-than-chance AUCs at 0.5 so a single unlucky validation split
# cannot blow the weight up.
print("weight at chance:", weights_from_phase1_auc((0.5,)).w[0])

# Checkpoint selection: diagnosis AUC + mean manifestation AUC.
for v_d, v_m in ((0.95, [0.7, 0.8, 0.9, 0.7, 0.8]), (0.93, [0.9, 0.9, 0.9, 0.8, 0.9])):
    print("v_diag %.2f, mean v_manif %.2f -> score %.3f" % (v_d, np.mean(v_m), selection_score(v_d, v_m)))
