from ...lmg.banded_hamiltonian import build_hamiltonian
from ...lmg.holstein_primakoff import hp_reference
from ...lmg.spectrum import instantaneous_spectrum
from .abstract_acceptance_criterion import AcceptanceCriterion

H_FIELD = 2.0
SITES = (256, 1024, 4096)
GAP_TOLERANCE = 0.01


class HolsteinPrimakoffGap(AcceptanceCriterion):
    number = 11
    name = 'holstein_primakoff_gap'
    required = 'gap at h=2 within 1% of 2 sqrt(2) at N=4096, converging monotonically over N in {256, 1024, 4096}'

    def measure(self) -> tuple[bool, dict[str, float | bool | str]]:
        omega = hp_reference(H_FIELD).omega
        deviations = []
        measured: dict[str, float | bool | str] = {'hp_omega': omega}
        for n_sites in SITES:
            gap = instantaneous_spectrum(build_hamiltonian(n_sites, H_FIELD), 2).get_gap()
            deviation = abs(gap - omega) / omega
            measured[f'gap N={n_sites}'] = gap
            deviations.append(deviation)
        measured['final_deviation'] = deviations[-1]
        return self.is_strictly_decreasing(deviations) and deviations[-1] <= GAP_TOLERANCE, measured
