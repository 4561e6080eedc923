import math

from numba import njit

from kinetics.errors import KineticsDomainError


@njit(cache=True)
def mm_rate(k_cat, e_conc, k_m, s_conc):
    """Unchecked Michaelis-Menten velocity, k_cat*[E]*[S] / (K_m + [S])."""
    return k_cat * e_conc * s_conc / (k_m + s_conc)


def michaelis_rate(k_cat, e_conc, k_m, s_conc):
    """
    Initial velocity of an enzyme-catalysed conversion.

    The maximum velocity is derived as V_max = k_cat * [E]; it is never
    stored on its own.

    Parameters:
        k_cat (float): Catalytic constant (1/time), finite and > 0.
        e_conc (float): Relative enzyme concentration in [0, 1].
        k_m (float): Michaelis constant (relative units), > 0.
        s_conc (float): Relative substrate concentration in [0, 1].

    Returns:
        float: Conversion rate (1/time), >= 0.

    Raises:
        KineticsDomainError: If an argument is non-finite or out of range.
    """
    for name, value in (("k_cat", k_cat), ("e_conc", e_conc), ("K_m", k_m), ("s_conc", s_conc)):
        if not math.isfinite(value):
            raise KineticsDomainError(f"{name} must be finite, got {value!r}")
    if k_m <= 0:
        raise KineticsDomainError(f"K_m must be > 0, got {k_m}")
    if k_cat <= 0:
        raise KineticsDomainError(f"k_cat must be > 0, got {k_cat}")
    if not 0.0 <= e_conc <= 1.0:
        raise KineticsDomainError(f"enzyme concentration must lie in [0, 1], got {e_conc}")
    if not 0.0 <= s_conc <= 1.0:
        raise KineticsDomainError(f"substrate concentration must lie in [0, 1], got {s_conc}")
    return float(mm_rate(float(k_cat), float(e_conc), float(k_m), float(s_conc)))
