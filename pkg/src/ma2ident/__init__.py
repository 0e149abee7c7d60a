"""Identification of MA(2) processes from their autocovariances."""

__version__ = "0.1.0"

from .core import (  # noqa: E402
    AcfTriple,
    BoundaryKind,
    BoundaryTag,
    Invertibility,
    Ma2Params,
    RootPair,
    acf_from_params,
    anderson_lhs,
    invertibility,
    params_from_acf_and_sigma2,
    roots_of_M,
    spectral_minimum,
)
from .errors import (  # noqa: E402
    CandidateInadmissible,
    DegenerateTheta2,
    DomainError,
    InfeasibleAcf,
    Ma2Error,
    NoInvertibleVersion,
    PathTooShort,
    Unclassifiable,
    UnitModulusRoot,
)
from .ident import (  # noqa: E402
    Candidate,
    IdentResult,
    SigmaCandidates,
    identify_invertible,
    sigma_candidates,
    theta_from_candidate,
)
from .versions import Version, VersionSet, enumerate_versions, versions_from_acf  # noqa: E402
from .classify import (  # noqa: E402
    CorrectSigma,
    RegionCase,
    classify_region,
    correct_sigma2,
    simplified_rule,
)
from .sim import SampleAcf, SimConfig, sample_acf, simulate_path  # noqa: E402
