"""
Beam search can beat greedy decoding
====================================

A two-step toy vocabulary {A, B, EOS} where the locally best first token
leads to a worse sentence.
"""

import numpy as np

from tiekd.decoding import BeamConfig, beam_search, greedy_search
from tiekd.model import EOS

A, B, V = 3, 4, 5
table = {(): {A: 0.6, B: 0.4}, (A,): {EOS: 0.5, A: 0.3, B: 0.2}, (B,): {EOS: 0.9, A: 0.05, B: 0.05}}


def step(rows, prefixes):
    out = np.full((len(prefixes), V), 1e-12)
    for r, p in enumerate(prefixes):
        for tok, prob in table.get(tuple(int(x) for x in p), {}).items():
            out[r, tok] = prob
    return np.log(out / out.sum(axis=1, keepdims=True))


g = greedy_search(step, 1, [2])[0]
b = beam_search(step, 1, BeamConfig(beam_size=2, length_penalty=0.0), [2])[0]
print("greedy:", g.tokens, "log p =", round(g.logprob, 4))
print("beam 2:", b.tokens, "log p =", round(b.logprob, 4))

###############################################################################
# Each beam token carries a flag saying whether it was the model's own
# top-1 choice in its context.  Sequence-level KD uses these flags to split
# a distilled corpus into top-1 and non-top-1 positions.

print("top-1 flags:", b.flags, "EOS flag:", b.eos_flag)
