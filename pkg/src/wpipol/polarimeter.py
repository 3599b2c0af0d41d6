"""Born-rule polarimeter simulation and four-setting Stokes tomography.

An analyzer is the projector onto |e(theta, delta)> = cos(theta)|x> +
e^{i delta} sin(theta)|y>: a rotatable linear polarizer preceded by a
retarder acting on the y component.  Detection clicks are binomial draws at
the Born-rule probability <e|rho|e>, seed-deterministic, with one
independent RNG stream per (seed, setting index).

Tomography uses the minimal informationally complete set H, V, D, R and the
linear estimator s1 = pH - pV, s2 = 2 pD - 1, s3 = 2 pR - 1, s0 = pH + pV.
The resulting P estimate, a square root of squared noisy terms, is
positively biased near P = 0 by O(1/sqrt(shots)); it is reported as-is with
a propagated 1-sigma error rather than bias-corrected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import RangeError
from .ioutil import dumps
from .states import DensityOperator
from .polarization import StokesVector


@dataclass(frozen=True)
class AnalyzerSetting:
    """Analyzer axis angle theta (from x) and retardance delta on y.

    Angles are wrapped into theta in [0, pi), delta in [0, 2*pi); both wraps
    leave the projector unchanged.
    """

    theta: float
    delta: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "theta", self.theta % math.pi)
        object.__setattr__(self, "delta", self.delta % (2.0 * math.pi))


#: the standard informationally complete setting list (H, V, D, R)
DEFAULT_SETTINGS = (
    AnalyzerSetting(0.0),
    AnalyzerSetting(math.pi / 2),
    AnalyzerSetting(math.pi / 4, 0.0),
    AnalyzerSetting(math.pi / 4, math.pi / 2),
)


@dataclass(frozen=True)
class ShotRecord:
    setting: AnalyzerSetting
    shots: int
    clicks: int


@dataclass(frozen=True)
class TomographyResult:
    stokes_hat: StokesVector
    deg_pol_hat: float
    std_err: float


def click_probability(rho: DensityOperator, s: AnalyzerSetting) -> float:
    """Born-rule transmission probability <e(theta, delta)| rho |e(theta, delta)>."""
    c = math.cos(s.theta)
    sn = math.sin(s.theta)
    cross = (complex(math.cos(s.delta), math.sin(s.delta)) * rho.mat.m12).real
    p = c * c * rho.mat.m11.real + sn * sn * rho.mat.m22.real + 2.0 * c * sn * cross
    return min(max(p, 0.0), 1.0)


def run_shots(rho: DensityOperator, s: AnalyzerSetting, shots: int, seed) -> ShotRecord:
    """Binomial click count at the Born-rule probability; seed-deterministic."""
    if shots <= 0:
        raise RangeError(f"shots must be positive, got {shots!r}")
    rng = np.random.default_rng(seed)
    clicks = int(rng.binomial(shots, click_probability(rho, s)))
    return ShotRecord(setting=s, shots=shots, clicks=clicks)


def tomograph(rho: DensityOperator, shots_per_setting: int, seed: int,
              settings=DEFAULT_SETTINGS, analytic: bool = False) -> TomographyResult:
    """Estimate the Stokes vector and P from four analyzer settings.

    ``analytic=True`` substitutes exact Born probabilities for sampled
    frequencies, isolating estimator error from shot noise.  Each setting
    draws from its own (seed, index) RNG stream, so per-setting results do
    not depend on evaluation order.
    """
    if shots_per_setting <= 0:
        raise RangeError(f"shots_per_setting must be positive, got {shots_per_setting!r}")
    if len(settings) != 4:
        raise RangeError(f"tomography needs exactly 4 settings (H, V, D, R roles), got {len(settings)}")
    if analytic:
        phat = [click_probability(rho, s) for s in settings]
    else:
        phat = [run_shots(rho, s, shots_per_setting, seed=[seed, i]).clicks / shots_per_setting
                for i, s in enumerate(settings)]
    ph, pv, pd, pr = phat
    s0 = ph + pv
    s1 = ph - pv
    s2 = 2.0 * pd - 1.0
    s3 = 2.0 * pr - 1.0
    r = math.sqrt(s1 * s1 + s2 * s2 + s3 * s3)
    deg_pol_hat = min(max(r / s0, 0.0), 1.0) if s0 > 0 else 0.0

    n = shots_per_setting
    var = [p * (1.0 - p) / n for p in phat]
    if r > 0.0 and s0 > 0.0:
        grads = [
            s1 / (r * s0) - r / (s0 * s0),   # d/dpH
            -s1 / (r * s0) - r / (s0 * s0),  # d/dpV
            2.0 * s2 / (r * s0),             # d/dpD
            2.0 * s3 / (r * s0),             # d/dpR
        ]
        std_err = math.sqrt(sum(g * g * v for g, v in zip(grads, var)))
    else:
        # gradient is singular at r = 0; quote the worst-case direction
        std_err = math.sqrt(var[0] + var[1] + 4.0 * var[2] + 4.0 * var[3]) / max(s0, 1e-300)
    # deterministic settings give zero propagated variance; keep std_err > 0
    std_err = max(std_err, 1.0 / n)

    stokes = StokesVector(1.0, s1 / s0, s2 / s0, s3 / s0) if s0 > 0 else StokesVector(1.0, 0.0, 0.0, 0.0)
    return TomographyResult(stokes_hat=stokes, deg_pol_hat=deg_pol_hat, std_err=std_err)


def shot_record_to_json(rec: ShotRecord) -> str:
    return dumps({
        "theta": rec.setting.theta,
        "delta": rec.setting.delta,
        "shots": rec.shots,
        "clicks": rec.clicks,
    })


def tomography_to_json(res: TomographyResult) -> str:
    return dumps({
        "stokes_hat": {"s0": res.stokes_hat.s0, "s1": res.stokes_hat.s1,
                       "s2": res.stokes_hat.s2, "s3": res.stokes_hat.s3},
        "deg_pol_hat": res.deg_pol_hat,
        "std_err": res.std_err,
    })
