"""Independent reference implementations used to cross-check the library.

These deliberately avoid the library's code paths: labeling is a BFS flood
fill, entropy composes the defining formulas by hand, TV is a double loop,
and gradients come from central finite differences.
"""

from __future__ import annotations

from collections import deque

import numpy as np


def flood_fill_labels(fg: np.ndarray) -> np.ndarray:
    """Label 8-connected components of a boolean grid by BFS flood fill.

    Components are numbered 1.. in raster order of discovery, which is the
    raster order of each component's first cell.
    """
    h, w = fg.shape
    labels = np.zeros((h, w), dtype=np.int64)
    next_label = 0
    for sr in range(h):
        for sc in range(w):
            if not fg[sr, sc] or labels[sr, sc]:
                continue
            next_label += 1
            queue = deque([(sr, sc)])
            labels[sr, sc] = next_label
            while queue:
                r, c = queue.popleft()
                for dr in (-1, 0, 1):
                    for dc in (-1, 0, 1):
                        rr, cc = r + dr, c + dc
                        if 0 <= rr < h and 0 <= cc < w and fg[rr, cc] and not labels[rr, cc]:
                            labels[rr, cc] = next_label
                            queue.append((rr, cc))
    return labels


def brute_spatial_entropy(s: np.ndarray, eps: float = 1e-9) -> float:
    """Entropy from first principles: mean threshold, flood fill, -sum p log p."""
    s = np.asarray(s, dtype=np.float64)
    b = np.maximum(s - s.mean(), 0.0)
    labels = flood_fill_labels(b > 0.0)
    count = labels.max()
    if count == 0:
        return 0.0
    total = 0.0
    masses = []
    for j in range(1, count + 1):
        cells = labels == j
        mass = b[cells].sum() + cells.sum() * eps
        masses.append(mass)
        total += mass
    return -sum(m / total * np.log(m / total) for m in masses)


def brute_tv(s: np.ndarray) -> float:
    """Total variation by explicit double loop over in-bounds neighbor pairs."""
    s = np.asarray(s, dtype=np.float64)
    k = s.shape[0]
    acc = 0.0
    for x in range(k):
        for y in range(k):
            if y + 1 < k:
                acc += abs(s[x, y] - s[x, y + 1])
            if x + 1 < k:
                acc += abs(s[x, y] - s[x + 1, y])
    return acc


def support_pattern(s: np.ndarray) -> np.ndarray:
    s = np.asarray(s, dtype=np.float64)
    return (s - s.mean()) > 0.0


def fd_entropy_gradient(
    s: np.ndarray, h: float = 1e-6, eps: float = 1e-9
) -> tuple[np.ndarray, np.ndarray]:
    """Central-difference gradient of the spatial entropy.

    Returns (gradient, valid) where ``valid`` marks cells whose +-h
    perturbation leaves the support pattern unchanged; the loss is only
    differentiable there, so other cells carry no comparable value.
    """
    s = np.asarray(s, dtype=np.float64)
    base = support_pattern(s)
    grad = np.zeros_like(s)
    valid = np.zeros(s.shape, dtype=bool)
    for idx in np.ndindex(s.shape):
        sp = s.copy()
        sm = s.copy()
        sp[idx] += h
        sm[idx] -= h
        if not (
            np.array_equal(support_pattern(sp), base)
            and np.array_equal(support_pattern(sm), base)
        ):
            continue
        valid[idx] = True
        grad[idx] = (brute_spatial_entropy(sp, eps) - brute_spatial_entropy(sm, eps)) / (2 * h)
    return grad, valid
