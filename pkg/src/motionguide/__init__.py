"""Counterfactual motion guidance: latent-space search over an autoencoder,
1NN baselines, and the evaluation harness that compares them."""

__version__ = "0.1.0"
