from ..drive_protocol import critical_params
from .bessel import bessel_j
from .sigma_pair import CrossingBranch, sigma_coeffs


class SingularPointError(ValueError):
    pass


def xi_critical(eta: float, t: float, branch: CrossingBranch | None = None) -> float:
    """
    Closed-form xi_t^2 at criticality (omega_c = 0, delta = 1, omega = |t|^eta) for the state that was the
    instantaneous ground state long before the crossing. The branch defaults to the sign of t.
    """
    if t == 0:
        msg = 'The critical solution is singular at t = 0'
        raise SingularPointError(msg)
    if branch is None:
        branch = CrossingBranch.from_time(t)

    params = critical_params(eta)
    p = params.p
    sigmas = sigma_coeffs(p, branch)
    zeta = params.zeta(t)
    j_minus = bessel_j(-p, zeta)
    j_plus = bessel_j(p, zeta)

    symmetric_weight = p * sigmas.sigma1**2 + sigmas.sigma2**2
    cross_weight = p * sigmas.sigma1**2 - sigmas.sigma2**2
    return p * abs(t) * symmetric_weight * (j_minus**2 + j_plus**2) + 2 * p * abs(t) * cross_weight * j_minus * j_plus
