from ...lmg.quench import propagate
from ..lmg_runner import calibrate_omega_c_coeff, get_effective_curve_deviation
from .abstract_acceptance_criterion import AcceptanceCriterion

CALIBRATION_SITES = 512
CALIBRATION_N_OVER_TAU = 30.0
COMPARISON_SITES = 2048
COMPARISON_N_OVER_TAUS = (10.0, 30.0)
SUP_NORM_TOLERANCE = 0.15


class EffectiveVsExact(AcceptanceCriterion):
    number = 6
    name = 'effective_vs_exact'
    required = (
        'effective defect density within 15% sup-norm of LMG on t/tau in [0.25, 1], each curve divided by its mean '
        'there, at N=2048 and N/tau in {10, 30}, with c calibrated at N=512'
    )

    def measure(self) -> tuple[bool, dict[str, float | bool | str]]:
        solver_config = self.run_config.solver_config
        samples = self.run_config.samples
        n_levels = self.run_config.n_levels

        calibration_record = propagate(
            CALIBRATION_SITES, CALIBRATION_SITES / CALIBRATION_N_OVER_TAU, solver_config, samples, n_levels=n_levels
        )
        omega_c_coeff = calibrate_omega_c_coeff(calibration_record, solver_config)

        measured: dict[str, float | bool | str] = {'omega_c_coeff': omega_c_coeff}
        passed = True
        for n_over_tau in COMPARISON_N_OVER_TAUS:
            record = propagate(
                COMPARISON_SITES, COMPARISON_SITES / n_over_tau, solver_config, samples, n_levels=n_levels
            )
            deviation = get_effective_curve_deviation(record, omega_c_coeff, solver_config)
            measured[f'sup_deviation N/tau={n_over_tau:g}'] = deviation
            passed = passed and deviation <= SUP_NORM_TOLERANCE
        return passed, measured
