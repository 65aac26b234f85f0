"""
Editing a teacher's soft target
===============================

A teacher distribution carries two kinds of information: which token it
ranks first, and how it spreads the rest of its mass.  The surgery modes
remove one or the other so their effect on a student can be measured.
"""

import numpy as np

from tiekd import tensor as T
from tiekd.losses import hierarchical_ranking, kd_cross_entropy
from tiekd.surgery import apply

# a teacher that prefers token 0, a gold token that disagrees
q = np.array([0.7, 0.2, 0.1])
gold = np.array(1)

for mode in ["vanilla", "no_correlation", "no_top1", "no_kd", "topk:2", "bucket:0.4:0.7"]:
    target, active = apply(mode, q, gold)
    print(f"{mode:>16}  {np.round(target, 4)}  kd_active={bool(active)}")

###############################################################################
# The student is trained on these targets with a cross-entropy form of KD.
# A uniform student pays log 3 against any normalized target.

student = T.Tensor(np.zeros((1, 3)))
print("uniform student vs vanilla target:", kd_cross_entropy(student, q[None]).item(), np.log(3))

###############################################################################
# The ranking loss penalizes a student whose top-k order disagrees with
# the teacher's.  Here the student swaps the teacher's second and third
# tokens.

p = np.array([[0.5, 0.1, 0.4]])
print("ranking loss, k=2:", hierarchical_ranking(T.Tensor(p), q[None], k=2).item())
