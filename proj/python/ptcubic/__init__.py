"""Complex cubic oscillators: exact perturbation series, Padé sums, spectra, tunneling constants."""

from fractions import Fraction

from ._ptcubic import (
    ComputationAnomaly,
    __version__,
    default_series_order,
    large_order,
    low_levels,
    massless_cubic_levels,
    models,
    mpep_directions,
    pade_curve,
    potential_grid,
    riccati_solve,
    tunneling_integral,
    wavefunction_tensor_json,
    wkb_constants,
    zeta_exact,
)
from . import _ptcubic


def energy_series(model, orders=-1):
    """Ground-state coefficients c_n of g^(2n) as Fractions."""
    return [Fraction(int(p), int(q)) for p, q in _ptcubic.energy_series(model, orders)]


__all__ = [
    "ComputationAnomaly",
    "default_series_order",
    "energy_series",
    "large_order",
    "low_levels",
    "massless_cubic_levels",
    "models",
    "mpep_directions",
    "pade_curve",
    "potential_grid",
    "riccati_solve",
    "tunneling_integral",
    "wavefunction_tensor_json",
    "wkb_constants",
    "zeta_exact",
]
