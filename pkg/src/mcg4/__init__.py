"""Exact mapping-class arithmetic for the four-punctured sphere.

The package classifies mapping classes (finite order / reducible /
pseudo-Anosov) through their action on the homology of the branched double
cover, computes stretching factors two independent ways (homology traces and
train-track growth eigenvalues), evaluates the universal and skein braid
representations exactly over integer Laurent rings, specializes them at
roots of unity, and demonstrates the convergence of level eigenvalues to the
stretching factor.
"""

from .words import (
    Generator,
    MappingWord,
    WordSyntaxError,
    invert,
    is_penner_positive,
    parse_word,
    render_word,
)
from .laurent import LaurentPoly, interpolate_laurent
from .mat2 import RingMat2, eigenpair_2x2, mat2_inverse, mat2_mul
from .homology import (
    AffineLift,
    NTClass,
    affine_lift,
    classification_record,
    homology_matrix,
    in_translation_subgroup,
    is_identity,
    nt_classify,
    sl2_word_matrix,
    stretch_factor,
    translation_subgroup_words,
)
from .quantum import (
    DOMINANT_EIGENVALUE_THRESHOLD,
    ConvergenceRow,
    QuantumLevel,
    RootSchedulePoint,
    convergence_csv,
    coprime_offset,
    evaluate_word,
    geometric_rep,
    infinite_order_certificate,
    level_matrix,
    reconstruct_skein,
    root_schedule,
    scalar_kernel_test,
    skein_generator_images,
    skein_rep,
    trace_convergence,
    universal_generator_images,
    universal_rep,
)
from .traintrack import (
    IncidenceMatrix,
    TransverseMeasure,
    apply_measure,
    incidence,
    is_perron_frobenius,
    pf_eigenvalue,
    traintrack_record,
)
from .verify import CheckResult, RELATION_WORDS, run_suite

__version__ = "0.1.0"

__all__ = [
    "Generator",
    "MappingWord",
    "WordSyntaxError",
    "invert",
    "is_penner_positive",
    "parse_word",
    "render_word",
    "LaurentPoly",
    "interpolate_laurent",
    "RingMat2",
    "eigenpair_2x2",
    "mat2_inverse",
    "mat2_mul",
    "AffineLift",
    "NTClass",
    "affine_lift",
    "classification_record",
    "homology_matrix",
    "in_translation_subgroup",
    "is_identity",
    "nt_classify",
    "sl2_word_matrix",
    "stretch_factor",
    "translation_subgroup_words",
    "DOMINANT_EIGENVALUE_THRESHOLD",
    "ConvergenceRow",
    "QuantumLevel",
    "RootSchedulePoint",
    "convergence_csv",
    "coprime_offset",
    "evaluate_word",
    "geometric_rep",
    "infinite_order_certificate",
    "level_matrix",
    "reconstruct_skein",
    "root_schedule",
    "scalar_kernel_test",
    "skein_generator_images",
    "skein_rep",
    "trace_convergence",
    "universal_generator_images",
    "universal_rep",
    "IncidenceMatrix",
    "TransverseMeasure",
    "apply_measure",
    "incidence",
    "is_perron_frobenius",
    "pf_eigenvalue",
    "traintrack_record",
    "CheckResult",
    "RELATION_WORDS",
    "run_suite",
    "__version__",
]
