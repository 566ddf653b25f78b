"""Lifting coloured braids to mapping classes of simple branched covers of the disc."""

from .braid import (
    BraidError,
    BraidGenerator,
    BraidWord,
    ColoredBraid,
    LabelTuple,
    RewriteError,
    canonical_label,
    equivalent_covers,
    hurwitz_apply,
    hurwitz_step,
    is_liftable,
    orbit,
    parse_braid,
    parse_labels,
    remove_same_label_crossings,
    total_monodromy,
)
from .cover import build_cover, spine, topology
from .graphical import (
    ArcWord,
    GraphicalObject,
    apply_generator,
    apply_morphism,
    canonical_object,
    label_of,
    objects_equal,
    validate_object,
)
from .lift import (
    LiftError,
    SpineSubstitution,
    arc_type,
    classify,
    compose_lifts,
    compute_lift,
    h1_action,
    invert_lift,
    is_identity,
)
from .perm import Permutation, Transposition

__version__ = "0.1.0"
