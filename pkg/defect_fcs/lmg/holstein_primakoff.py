import math
from typing import NamedTuple

from ..drive_protocol import DomainError
from .spectrum import CRITICAL_FIELD


class CriticalPointError(ValueError):
    pass


class HpReference(NamedTuple):
    omega: float
    mass: float
    e0: float
    delta_e_corr: float
    e2_shift: float


def hp_reference(h_field: float) -> HpReference:
    """
    Leading-order Holstein-Primakoff oscillator of the LMG model around its ground state. e0 is the classical energy
    per site (H/N = -e0), e2_shift the constant of the quadratic term and delta_e_corr = omega/2 - e2_shift.
    """
    if h_field < 0:
        msg = f'Field must be >= 0, got {h_field}'
        raise DomainError(msg)
    if h_field == CRITICAL_FIELD:
        msg = 'The gap closes at the critical field h=1'
        raise CriticalPointError(msg)

    if h_field > CRITICAL_FIELD:
        omega = 2 * math.sqrt(h_field * (h_field - 1))
        mass = 1 / (2 * h_field)
        e0 = h_field
        e2_shift = h_field - 0.5
    else:
        omega = 2 * math.sqrt(1 - h_field**2)
        mass = 0.5
        e0 = (1 + h_field**2) / 2
        e2_shift = 0.5
    return HpReference(omega=omega, mass=mass, e0=e0, delta_e_corr=omega / 2 - e2_shift, e2_shift=e2_shift)
