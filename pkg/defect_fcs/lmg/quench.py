from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt
from scipy.integrate import RK45

from ..drive_protocol import DomainError
from ..ermakov.ermakov_integrator import IntegrationFailureError
from ..ermakov.solver_config import SolverConfig
from .banded_hamiltonian import BandedHamiltonian, build_hamiltonian
from .field_schedule import FieldSchedule, LinearFieldSchedule
from .observables import MIN_CAPTURED_WEIGHT, defect_density, get_captured_weight, ground_overlap, irreversible_work
from .spectrum import LevelTracker, Spectrum, ground_state, parity_block_spectrum
from .spin_sector import Parity, SpinSector, SpinSectorState

logger = logging.getLogger(__name__)

QUENCH_COLUMNS = ('t', 't_over_tau', 'h', 'defect_density', 'w_irr', 'ground_overlap')
DEFAULT_LEVEL_COUNT = 32
RENORMALISATION_THRESHOLD = 1e-12
MAX_NORM_DRIFT = 1e-6


class NormDriftError(IntegrationFailureError):
    pass


@dataclass(frozen=True)
class QuenchSample:
    t: float
    t_over_tau: float
    h: float
    defect_density: float
    w_irr: float
    ground_overlap: float

    def as_row(self) -> tuple[float, ...]:
        return self.t, self.t_over_tau, self.h, self.defect_density, self.w_irr, self.ground_overlap


@dataclass
class QuenchRecord:
    n_sites: int
    tau: float
    samples: list[QuenchSample] = field(default_factory=list)
    number_of_renormalisations: int = 0

    @property
    def n_over_tau(self) -> float:
        return self.n_sites / self.tau

    def get_times(self) -> npt.NDArray[np.float64]:
        return np.array([sample.t for sample in self.samples])

    def get_defect_densities(self) -> npt.NDArray[np.float64]:
        return np.array([sample.defect_density for sample in self.samples])

    def get_final_sample(self) -> QuenchSample:
        return self.samples[-1]

    def to_rows(self) -> list[tuple[float, ...]]:
        return [sample.as_row() for sample in self.samples]


class SchrodingerPropagator:
    """
    Integrates i d/dt psi = H(t) psi inside the spin-N/2 sector with RK45 and banded matrix-vector products. After
    every accepted step the norm drift is checked: small drift is renormalised and counted, large drift is fatal.
    """

    def __init__(self, n_sites: int, schedule: FieldSchedule, solver_config: SolverConfig):
        self.sector = SpinSector(n_sites)
        self.schedule = schedule
        self.solver_config = solver_config
        self.coupling = build_hamiltonian(n_sites, 0.0)
        self.magnetizations = self.sector.get_magnetizations()
        self.number_of_renormalisations = 0

    def get_hamiltonian(self, t: float) -> BandedHamiltonian:
        return build_hamiltonian(self.sector.n_sites, self.schedule.field_at(t))

    def get_right_hand_side(self, t: float, psi: npt.NDArray[np.complex128]) -> npt.NDArray[np.complex128]:
        h_field = self.schedule.field_at(t)
        return -1j * (self.coupling.matvec(psi) - 2 * h_field * self.magnetizations * psi)

    def get_initial_state(self, t_start: float) -> SpinSectorState:
        """Even-parity ground state, the block connected to the fully polarised state."""
        ground = ground_state(self.get_hamiltonian(t_start), Parity.EVEN)
        return SpinSectorState(ground.state.amplitudes, t_start).normalised()

    def step_to(self, state: SpinSectorState, t_end: float) -> SpinSectorState:
        """Steps RK45 from state.time to t_end, checking the norm after every accepted step."""
        if t_end == state.time:
            return state
        solver = RK45(
            self.get_right_hand_side,
            state.time,
            state.amplitudes,
            t_end,
            rtol=self.solver_config.rel_tol,
            atol=self.solver_config.abs_tol,
            max_step=self.solver_config.max_step,
        )
        while solver.status == 'running':
            solver.step()
            if solver.status == 'failed':
                msg = f'Schrodinger integration failed at t={solver.t} on the way to t={t_end}'
                raise IntegrationFailureError(msg, t=solver.t)
            self.check_norm(solver)
        return SpinSectorState(solver.y.copy(), t_end)

    def check_norm(self, solver: RK45) -> None:
        """Renormalises the stepper's state in place once its drift passes the threshold."""
        norm = float(np.linalg.norm(solver.y))
        drift = abs(norm - 1)
        if drift > MAX_NORM_DRIFT:
            msg = f'Norm drift {drift} at t={solver.t} exceeds {MAX_NORM_DRIFT}'
            raise NormDriftError(msg, t=solver.t)
        if drift > RENORMALISATION_THRESHOLD:
            self.number_of_renormalisations += 1
            logger.debug('Renormalising at t=%s, drift=%s', solver.t, drift)
            solver.y /= norm
            solver.f /= norm

    def propagate_states(
        self, times: npt.NDArray[np.float64], initial_state: SpinSectorState | None = None
    ) -> list[SpinSectorState]:
        if initial_state is None:
            initial_state = self.get_initial_state(float(times[0]))
        states = []
        state = initial_state
        for t in times:
            state = self.step_to(state, float(t))
            states.append(state)
        return states


def get_capturing_spectrum(hamiltonian: BandedHamiltonian, state: SpinSectorState, n_levels: int) -> Spectrum:
    """Lowest even-block levels, doubling the count until they hold the state's weight."""
    block_dim = len(hamiltonian.sector.get_block_indices(Parity.EVEN))
    k = min(n_levels, block_dim)
    while True:
        spectrum = parity_block_spectrum(hamiltonian, k, Parity.EVEN)
        if k == block_dim or get_captured_weight(state, spectrum) >= MIN_CAPTURED_WEIGHT:
            return spectrum
        k = min(2 * k, block_dim)


def measure_sample(
    propagator: SchrodingerPropagator, state: SpinSectorState, tracker: LevelTracker, tau: float, n_levels: int
) -> QuenchSample:
    hamiltonian = propagator.get_hamiltonian(state.time)
    spectrum = tracker.track(get_capturing_spectrum(hamiltonian, state, n_levels))
    return QuenchSample(
        t=state.time,
        t_over_tau=state.time / tau,
        h=hamiltonian.h_field,
        defect_density=defect_density(state, spectrum),
        w_irr=irreversible_work(state, hamiltonian, spectrum.get_ground_energy()),
        ground_overlap=ground_overlap(state, spectrum),
    )


def propagate(
    n_sites: int,
    tau: float,
    solver_config: SolverConfig,
    samples: int,
    schedule: FieldSchedule | None = None,
    n_levels: int = DEFAULT_LEVEL_COUNT,
) -> QuenchRecord:
    """Starts in the even-block ground state at t = -tau and records observables at evenly spaced times."""
    if tau <= 0:
        msg = f'tau must be > 0, got {tau}'
        raise DomainError(msg)
    if samples < 2:
        msg = f'At least two samples are needed, got {samples}'
        raise DomainError(msg)
    if schedule is None:
        schedule = LinearFieldSchedule(tau)

    wall_clock_start = time.perf_counter()
    propagator = SchrodingerPropagator(n_sites, schedule, solver_config)
    tracker = LevelTracker()
    times = np.linspace(-tau, tau, samples)
    record = QuenchRecord(n_sites, tau)
    for state in propagator.propagate_states(times):
        record.samples.append(measure_sample(propagator, state, tracker, tau, n_levels))
    record.number_of_renormalisations = propagator.number_of_renormalisations

    logger.info(
        'LMG quench N=%d tau=%s: final defect density %s, %d renormalisations in %.3fs',
        n_sites,
        tau,
        record.get_final_sample().defect_density,
        record.number_of_renormalisations,
        time.perf_counter() - wall_clock_start,
    )
    return record
