from sequence_graphs.bit_utils import bits, reverse_bits, split_b0_b1

from .chamanara import (
    ChamanaraEmbedding,
    Crossing,
    EdgeRoute,
    RouteCase,
    chamanara_embed,
    chamanara_frame,
    covering_scale,
    psi,
    scale_for,
)
from .rotation import (
    DartOrder,
    FaceReport,
    RotationSystem,
    TorusEmbedding,
    canonical_rotation,
    face_trace,
    torus_embedding,
    torus_rotation_system,
)
from .segments import Axis, SegmentMap, parse_segment_name, segment_map
from .svg import chamanara_svg, sequence_graph_svg
from .verify import Check, EmbeddingCertificate, Violation, verify_embedding

__all__ = [
    # bit_utils
    "bits",
    "reverse_bits",
    "split_b0_b1",
    # chamanara
    "ChamanaraEmbedding",
    "Crossing",
    "EdgeRoute",
    "RouteCase",
    "chamanara_embed",
    "chamanara_frame",
    "covering_scale",
    "psi",
    "scale_for",
    # rotation
    "DartOrder",
    "FaceReport",
    "RotationSystem",
    "TorusEmbedding",
    "canonical_rotation",
    "face_trace",
    "torus_embedding",
    "torus_rotation_system",
    # segments
    "Axis",
    "SegmentMap",
    "parse_segment_name",
    "segment_map",
    # svg
    "chamanara_svg",
    "sequence_graph_svg",
    # verify
    "Check",
    "EmbeddingCertificate",
    "Violation",
    "verify_embedding",
]
