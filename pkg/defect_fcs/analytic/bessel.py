import math

import numpy as np
import numpy.typing as npt
from scipy import special


class BesselDomainError(ValueError):
    pass


def ensure_supported(order: float, x: float | npt.NDArray[np.float64]) -> None:
    if np.any(np.asarray(x) < 0):
        msg = f'Bessel argument must be >= 0, got {x}'
        raise BesselDomainError(msg)
    if order < 0 and float(order).is_integer():
        msg = f'Negative integer order {order} is not supported'
        raise BesselDomainError(msg)
    if not math.isfinite(order):
        msg = f'Bessel order must be finite, got {order}'
        raise BesselDomainError(msg)


def bessel_j(order: float, x: float) -> float:
    """Bessel function of the first kind J_order(x) for real order and x >= 0."""
    ensure_supported(order, x)
    return float(special.jv(order, x))


def bessel_j_array(order: float, x: npt.NDArray[np.float64]) -> npt.NDArray[np.float64]:
    ensure_supported(order, x)
    return np.asarray(special.jv(order, x), dtype=np.float64)
