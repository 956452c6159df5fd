from schemas.lattice import SurfaceParams, DivisorClass, CohTable  # noqa
from schemas.field import FieldSpec  # noqa
from schemas.presentation import ScrollConfig, ConfigValidation, Presentation  # noqa
from schemas.scroll import ScrollClass, ScrollBundleData, SpecialnessVerdict  # noqa
from schemas.reports import (  # noqa
    LocalFreeVerdict, MatrixSummary, ExtDims, Attempt, VerificationReport,
    LineSearchResult, DimensionReport,
    ScrollTable, CandidateVerdict, MainTheoremAReport, SlopeReport,
    SweepSummary,
)
