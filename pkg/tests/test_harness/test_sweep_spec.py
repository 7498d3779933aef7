from pathlib import Path
from unittest import TestCase

from defect_fcs.harness.sweep_spec import EffectivePoint, LmgPoint, RunKind, SweepSpec
from defect_fcs.run_config import BadRunConfigError, RunConfig


def build_sweep_spec(run_kind: RunKind, **axes: tuple[float, ...]) -> SweepSpec:
    run_config = RunConfig().with_overrides(**axes)
    return SweepSpec.from_run_config(run_kind, run_config)


class TestSweepSpec(TestCase):
    def test_effective_points(self) -> None:
        """Every combination of the four effective axes, the last axis varying fastest."""
        sweep_spec = build_sweep_spec(RunKind.EFFECTIVE, etas=(1.0, 2.0), taus=(10.0, 20.0), deltas=(1.0, 3.0))
        points = sweep_spec.get_effective_points()
        self.assertEqual(len(points), 8)
        self.assertEqual(sweep_spec.get_number_of_points(), 8)
        self.assertEqual(points[0], EffectivePoint(eta=1.0, tau=10.0, omega_c=0.0, delta=1.0))
        self.assertEqual(points[1], EffectivePoint(eta=1.0, tau=10.0, omega_c=0.0, delta=3.0))
        self.assertEqual(points[-1], EffectivePoint(eta=2.0, tau=20.0, omega_c=0.0, delta=3.0))

    def test_lmg_points(self) -> None:
        """LMG points are given by N and N/tau."""
        sweep_spec = build_sweep_spec(RunKind.LMG, n_sites=(64, 128), n_over_taus=(8.0,))
        points = sweep_spec.get_lmg_points()
        self.assertEqual(points, [LmgPoint(64, 8.0), LmgPoint(128, 16.0)])
        self.assertEqual(points[1].n_over_tau, 8.0)
        self.assertEqual(list(sweep_spec.get_axes()), ['n_sites', 'n_over_tau'])

    def test_analytic_axes(self) -> None:
        sweep_spec = build_sweep_spec(RunKind.ANALYTIC, analytic_etas=(0.5, 1.0, 2.0))
        self.assertEqual(sweep_spec.get_axes(), {'eta': (0.5, 1.0, 2.0)})
        self.assertEqual(sweep_spec.get_number_of_points(), 3)

    def test_empty_axis(self) -> None:
        """An empty axis relevant to the run is a config error."""
        with self.assertRaises(BadRunConfigError):
            SweepSpec(RunKind.EFFECTIVE, (), (1.0,), (0.0,), (1.0,), (64,), (1.0,), Path('out.csv'))

    def test_irrelevant_empty_axis(self) -> None:
        """Axes of other run kinds are not checked."""
        sweep_spec = SweepSpec(RunKind.LMG, (), (), (), (), (64,), (1.0,), Path('out.csv'))
        self.assertEqual(sweep_spec.get_number_of_points(), 1)

    def test_bad_jobs(self) -> None:
        with self.assertRaises(BadRunConfigError):
            SweepSpec(RunKind.ANALYTIC, (1.0,), (1.0,), (0.0,), (1.0,), (64,), (1.0,), Path('out.csv'), jobs=0)
