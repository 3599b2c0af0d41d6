"""Which-path information and the degree of polarization in single-photon interference.

Library layout:

* :mod:`wpipol.linalg`       -- 2x2 complex matrix algebra
* :mod:`wpipol.states`       -- two-path photon states and density operators
* :mod:`wpipol.polarization` -- polarization matrix, P, and Stokes parameters
* :mod:`wpipol.duality`      -- Mandel decomposition and the P >= I relations
* :mod:`wpipol.polarimeter`  -- Born-rule shot simulation and Stokes tomography
* :mod:`wpipol.verify`       -- randomized cross-module invariant suite
* :mod:`wpipol.cli`          -- ``wpipol`` command-line entry point
"""

from .duality import DualityReport, MandelDecomposition, duality_report, mandel_decompose, sweep
from .linalg import CMat2, random_unitary
from .polarimeter import AnalyzerSetting, ShotRecord, TomographyResult, click_probability, run_shots, tomograph
from .polarization import (FieldScale, PolarizationMatrix, StokesVector,
                           degree_of_polarization, degree_of_polarization_closed_form,
                           polarization_matrix, stokes_from_gamma, unitary_conjugate)
from .states import (AmplitudePair, BasisLabel, DensityOperator, build_rho, build_rho_d,
                     build_rho_id, rho_from_json, rho_to_json, validate_density)

__all__ = [
    "AmplitudePair", "AnalyzerSetting", "BasisLabel", "CMat2", "DensityOperator",
    "DualityReport", "FieldScale", "MandelDecomposition", "PolarizationMatrix",
    "ShotRecord", "StokesVector", "TomographyResult",
    "build_rho", "build_rho_d", "build_rho_id", "click_probability",
    "degree_of_polarization", "degree_of_polarization_closed_form",
    "duality_report", "mandel_decompose", "polarization_matrix", "random_unitary",
    "rho_from_json", "rho_to_json", "run_shots", "stokes_from_gamma", "sweep",
    "tomograph", "unitary_conjugate", "validate_density",
]

__version__ = "0.1.0"
