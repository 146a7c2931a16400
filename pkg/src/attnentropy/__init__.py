"""Spatial-entropy regularization for attention maps.

Core pieces: validated score grids and similarity maps (:mod:`.grid`),
8-connected component labeling (:mod:`.components`), the spatial-entropy
and total-variation losses with exact gradients (:mod:`.entropy`), a
desk-scale vision transformer with reverse-mode gradients (:mod:`.model`),
a synthetic shape dataset and training harness (:mod:`.shapes`,
:mod:`.training`), and attention-map analysis (:mod:`.analysis`).
"""

from .components import ComponentLabeling, connected_components, largest_components
from .entropy import (
    EntropyResult,
    LossConfig,
    spatial_entropy,
    spatial_entropy_loss,
    threshold_map,
    tv_loss,
)
from .grid import (
    Grid2D,
    HeadProjection,
    cosine_similarity_map,
    grid_mean,
    read_grid,
    similarity_map,
    write_grid,
)

__version__ = "0.1.0"

__all__ = [
    "ComponentLabeling",
    "EntropyResult",
    "Grid2D",
    "HeadProjection",
    "LossConfig",
    "connected_components",
    "cosine_similarity_map",
    "grid_mean",
    "largest_components",
    "read_grid",
    "similarity_map",
    "spatial_entropy",
    "spatial_entropy_loss",
    "threshold_map",
    "tv_loss",
    "write_grid",
    "__version__",
]
