"""K-ring presentations of torus manifolds whose orbit-space nerve is shellable.

From a nerve complex and a characteristic matrix the package builds
``Z[v_1..v_m] / I``, certifies that it is free of rank equal to the number
of facets of the nerve, and exhibits the basis coming from a shelling.
"""

from .charmap import CharMatrix, pairing, smith_diagonal, validate_nonsingular
from .errors import (HypothesisError, IndeterminateRankError, InputError,
                     NonsingularityError, NotShellableError)
from .nerve import NerveComplex, all_faces, is_face, minimal_nonfaces, validate
from .polyz import (GroebnerBasis, IntPoly, QuotientModule, buchberger_z,
                    normal_form, quotient_module)
from .presentation import (ManifoldSpec, RingPresentation,
                           cohomology_presentation, k_presentation,
                           shelling_basis_check, sr_relations,
                           structure_constants, t_relation)
from .shelling import (Shelling, cell_dimensions, find_shelling, h_vector,
                       interval_of, verify_shelling)
from .specdoc import SpecDocument, generate_example, parse_spec, serialize_spec

__version__ = "0.1.0"

__all__ = [
    "CharMatrix", "GroebnerBasis", "HypothesisError", "IndeterminateRankError",
    "InputError", "IntPoly", "ManifoldSpec", "NerveComplex",
    "NonsingularityError", "NotShellableError", "QuotientModule",
    "RingPresentation", "Shelling", "SpecDocument", "all_faces",
    "buchberger_z", "cell_dimensions", "cohomology_presentation",
    "find_shelling", "generate_example", "h_vector", "interval_of", "is_face",
    "k_presentation", "minimal_nonfaces", "normal_form", "pairing",
    "parse_spec", "quotient_module", "serialize_spec", "shelling_basis_check",
    "smith_diagonal", "sr_relations", "structure_constants", "t_relation",
    "validate", "validate_nonsingular", "verify_shelling",
]
