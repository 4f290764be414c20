"""polyasr: desk-scale multilingual hybrid ASR toolkit.

Merged-IPA pronunciation lexica, Witten-Bell bigram language models,
feed-forward NN/HMM acoustic models with output-layer transfer learning,
Viterbi decoding/alignment and WER scoring, plus a config-driven experiment
harness producing (mother-language x spoken-language) WER matrices.
"""

__version__ = "0.1.0"
