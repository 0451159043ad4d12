"""Desk-scale laboratory for unsupervised adversarial training.

Subpackages cover the two-class Gaussian theory (sampling, estimators,
robust-error formulas, tail-bound checks), a small dense network with exact
analytic gradients, the L-infinity attack suite, the semi-supervised
adversarial trainers, synthetic dataset generators, and an experiment
harness with CSV/JSON reports and rendered figures.
"""

__version__ = "0.1.0"
