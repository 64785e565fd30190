"""d-divisible alpha-labelings of caterpillars, hairy cycles and cycles,
and the cyclic decompositions of complete multipartite graphs they give."""

from .cycles import cycle_closing_value, cycle_d_divisible
from .decompose import Decomposition, base_blocks, decompose, develop, verify_decomposition
from .errors import LabelingError
from .graphs import (
    CaterpillarSpec,
    MultipartiteSpec,
    OrderedBipartiteGraph,
    build_caterpillar,
    build_corona,
    build_cycle,
    build_hairy_cycle,
    multipartite_edges,
)
from .hairy import corona_d_divisible, odd_alpha_hairy
from .labeling import (
    LabelSet,
    Labeling,
    caterpillar_d_divisible,
    complement_labeling,
    divisible_label_set,
    standard_alpha_s,
    verify_alpha_s,
    verify_d_divisible,
)
from .oracle import search_labelings, search_transform_sequence
from .transforms import TransformRequest, apply_transform, compose_transforms

__all__ = [
    "CaterpillarSpec",
    "Decomposition",
    "LabelSet",
    "Labeling",
    "LabelingError",
    "MultipartiteSpec",
    "OrderedBipartiteGraph",
    "TransformRequest",
    "apply_transform",
    "base_blocks",
    "build_caterpillar",
    "build_corona",
    "build_cycle",
    "build_hairy_cycle",
    "caterpillar_d_divisible",
    "complement_labeling",
    "compose_transforms",
    "corona_d_divisible",
    "cycle_closing_value",
    "cycle_d_divisible",
    "decompose",
    "develop",
    "divisible_label_set",
    "multipartite_edges",
    "odd_alpha_hairy",
    "search_labelings",
    "search_transform_sequence",
    "standard_alpha_s",
    "verify_alpha_s",
    "verify_d_divisible",
    "verify_decomposition",
]
