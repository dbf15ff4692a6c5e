"""Binary relations, their order extensions, realizers, dimensions and geometric models."""

from .classify import ClassReport, classify, interval_violations, semiorder_violations
from .dimension import (
    DimCertificate,
    dimension,
    hybrid_dim,
    interval_dim,
    order_dim,
    semiorder_dim,
)
from .errors import *  # noqa: F401,F403
from .extend import (
    Decomposition,
    PartnerClass,
    decompose,
    interval_extension,
    linear_extension,
    linear_interval_decompose,
    linear_semiorder_decompose,
    literal_decomposition,
    semiorder_extension,
    strong_interval_extension,
)
from .geometry import (
    GeometricRep,
    RepKind,
    box_embedding,
    interval_representation,
    product_linearization,
    product_relation,
    triangle_representation,
    unit_interval_representation,
)
from .io import RelationDocument, emit, parse_relation
from .realize import MemberClass, Realizer, realizer, verify_realizer
from .relation import (
    Relation,
    Witness,
    WitnessKind,
    asymmetric_part,
    is_acyclic,
    is_extension,
    is_transitively_antisymmetric,
    reflexive_closure,
    transitive_closure,
)

__version__ = "0.1.0"
