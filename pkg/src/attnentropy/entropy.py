"""Spatial-entropy loss over thresholded similarity maps, with exact gradients.

Pipeline per head: subtract the grid mean and clamp at zero, label the
8-connected components of the strictly positive support, form component
probabilities from the clamped mass, and take the Shannon entropy (nats).
A small ``epsilon`` enters only the probability normalization (per cell of
support), guarding log(0) without inflating the support itself.

The gradient treats the component masks as constants but differentiates
through both the clamped values and the mean, so it is the one-sided
derivative on the current support pattern.  ``detach_mean=True`` drops the
mean's contribution (ablation switch).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .components import ComponentLabeling, connected_components
from .errors import DimensionMismatchError, EmptyInputError
from .grid import grid_values


@dataclass(frozen=True)
class LossConfig:
    """Spatial-entropy loss settings: natural log, mean reduction over heads."""

    epsilon: float = 1e-9
    detach_mean: bool = False

    def __post_init__(self):
        if not self.epsilon > 0:
            raise ValueError(f"epsilon must be > 0, got {self.epsilon}")


@dataclass
class EntropyResult:
    """Entropy of one map: value in nats, component probabilities, d(entropy)/d(map)."""

    entropy: float
    probabilities: np.ndarray
    gradient: np.ndarray
    components: ComponentLabeling


def threshold_map(s) -> tuple[np.ndarray, float]:
    """Zero out cells at or below the grid mean: returns (relu(s - mean), mean)."""
    vals = grid_values(s)
    m = float(vals.mean())
    return np.maximum(vals - m, 0.0), m


def spatial_entropy(s, cfg: LossConfig = LossConfig()) -> EntropyResult:
    """Spatial entropy of one similarity map plus its gradient.

    Empty support (a constant map) has entropy 0 and zero gradient.
    """
    vals = grid_values(s)
    n = vals.size
    b, _ = threshold_map(vals)
    comp = connected_components(b, 0.0)
    if comp.count == 0:
        return EntropyResult(
            entropy=0.0,
            probabilities=np.zeros(0),
            gradient=np.zeros_like(vals),
            components=comp,
        )

    labels = comp.labels
    masses = np.bincount(labels.ravel(), weights=b.ravel(), minlength=comp.count + 1)[1:]
    u = masses + comp.sizes * cfg.epsilon
    total = u.sum()
    probs = u / total
    log_p = np.log(probs)
    entropy = float(-(probs @ log_p)) + 0.0

    # Reverse pass with masks frozen: each support cell's value feeds its
    # component numerator and the shared normalizer with unit coefficient.
    d_prob = -(log_p + 1.0)
    d_total = -(d_prob @ probs) / total
    d_u = d_prob / total
    support = labels > 0
    grad = np.zeros_like(vals)
    grad[support] = d_u[labels[support] - 1] + d_total
    if not cfg.detach_mean:
        grad -= grad.sum() / n
    return EntropyResult(entropy=entropy, probabilities=probs, gradient=grad, components=comp)


def _check_heads(heads) -> list[np.ndarray]:
    if len(heads) == 0:
        raise EmptyInputError("head list is empty")
    arrs = [grid_values(h) for h in heads]
    k = arrs[0].shape[0]
    for i, a in enumerate(arrs):
        if a.shape[0] != k:
            raise DimensionMismatchError(
                f"head {i} has side {a.shape[0]}, expected {k}"
            )
    return arrs


def spatial_entropy_loss(
    heads, cfg: LossConfig = LossConfig()
) -> tuple[float, list[np.ndarray]]:
    """Mean spatial entropy over heads and per-head gradients (scaled 1/H)."""
    arrs = _check_heads(heads)
    n_heads = len(arrs)
    results = [spatial_entropy(a, cfg) for a in arrs]
    loss = sum(r.entropy for r in results) / n_heads
    grads = [r.gradient / n_heads for r in results]
    return loss, grads


def tv_loss(heads) -> tuple[float, list[np.ndarray]]:
    """Total-variation penalty over heads: sum of absolute differences between
    horizontally and vertically adjacent cells, averaged over heads.

    Subgradient 0 is chosen wherever neighbors tie.
    """
    arrs = _check_heads(heads)
    n_heads = len(arrs)
    loss = 0.0
    grads = []
    for a in arrs:
        dh = a[:, :-1] - a[:, 1:]
        dv = a[:-1, :] - a[1:, :]
        loss += np.abs(dh).sum() + np.abs(dv).sum()
        g = np.zeros_like(a)
        sh = np.sign(dh)
        sv = np.sign(dv)
        g[:, :-1] += sh
        g[:, 1:] -= sh
        g[:-1, :] += sv
        g[1:, :] -= sv
        grads.append(g / n_heads)
    return loss / n_heads, grads
