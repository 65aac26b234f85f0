"""
Distilling a tiny translation model
===================================

Train a teacher on a synthetic cipher-with-synonyms task, then train three
small students from it: plain cross-entropy, word-level KD, and the
iterative ranking variant.  Everything runs on a CPU in a few minutes.
"""

import numpy as np

from tiekd.data import TaskSpec, generate
from tiekd.model import ModelConfig, Seq2SeqModel
from tiekd.trainer import TrainConfig, train

task = TaskSpec(src_vocab_size=32, max_len=8, n_train=4000, n_valid=200, n_test=0, seed=7)
corpus = generate(task)
print("vocabulary size:", task.vocab_size, " dominant-synonym probability:", task.dominant_prob)


def model(d, layers, seed):
    return Seq2SeqModel(ModelConfig(vocab_size=task.vocab_size, d_model=d, n_heads=4, n_enc_layers=layers,
                                    n_dec_layers=layers, d_ffn=4 * d, max_len=32, seed=seed))


###############################################################################
# The teacher sees large batches for many steps.

teacher = model(64, 2, seed=0)
_, rep = train(teacher, corpus["train"], TrainConfig(max_steps=1500, batch_tokens=256, warmup=200),
               valid=corpus["valid"])
print(f"teacher   acc {rep.token_acc:.3f}  BLEU {rep.bleu:.1f}")

###############################################################################
# Students are smaller and see far fewer tokens, so they stay short of the
# teacher and the choice of objective matters.

for flavor in ("none", "word_kd", "tie_kd"):
    cfg = TrainConfig(flavor=flavor, max_steps=1500, batch_tokens=32, warmup=200, seed=1)
    _, rep = train(model(32, 1, seed=1), corpus["train"], cfg, teacher=teacher, valid=corpus["valid"])
    print(f"{flavor:>8}  acc {rep.token_acc:.3f}  TA {rep.ta:.3f}  D_rank {rep.d_rank:.2f}  BLEU {rep.bleu:.1f}")
