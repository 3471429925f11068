"""Constructive bounded path cover: layering, attachment threading and the global assembly."""

from .attachments import AttachmentProfile, profile_attachment, select_bad_indices
from .layers import LayerDecomposition, layer_decomposition, longest_induced_path
from .segment import cover_path_attachments, partition_path_attachments
from .theorem import theorem_cover

__all__ = [
    "AttachmentProfile", "LayerDecomposition", "cover_path_attachments", "layer_decomposition",
    "longest_induced_path", "partition_path_attachments", "profile_attachment", "select_bad_indices",
    "theorem_cover",
]
