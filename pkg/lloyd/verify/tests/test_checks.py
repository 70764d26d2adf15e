from django.test import SimpleTestCase

from core.exceptions import InvalidArgumentError
from verify.checks import (
    CHECKS, PRESETS, QUICK, check_analytic_strip, check_bethe,
    check_continuum_ids, check_semigroup, check_theorem1_charfn,
    check_theorem1_dos, run_check,
)


class DeterministicCheckTests(SimpleTestCase):
    def test_semigroup(self):
        report = check_semigroup(window=2.0, step=0.05, padding=20.0,
                                 max_sup=1e-3)
        self.assertTrue(report.passed, report.metrics)
        self.assertGreaterEqual(report.runtime, 0.0)

    def test_analytic_strip(self):
        report = check_analytic_strip(heights=(-0.5, 0.0, 0.5),
                                      energies='-2:2:1')
        self.assertTrue(report.passed, report.metrics)
        self.assertEqual(report.metrics['outside_strip_unraised'], 0.0)

    def test_heights_must_stay_inside_the_strip(self):
        with self.assertRaises(InvalidArgumentError):
            check_analytic_strip(scale=1.0, heights=(0.95,))

    def test_free_characteristic_function(self):
        report = check_theorem1_charfn(side=64, n_samples=2, t_max=2.0,
                                       t_step=0.5, disorder=False)
        self.assertTrue(report.passed, report.metrics)
        self.assertNotIn('max_z', report.metrics)
        self.assertLess(report.metrics['max_deviation'], 1e-10)

    def test_single_vertex_tree(self):
        report = check_bethe(depth=0, n_samples=5, grid='-2:2:0.5')
        self.assertTrue(report.passed, report.metrics)
        self.assertLess(report.metrics['corrected_sup'], 1e-12)
        self.assertEqual(report.metrics['max_z'], 0.0)

    def test_free_tree(self):
        report = check_bethe(depth=14, n_samples=1, broaden=0.5,
                             grid='-2.5:2.5:0.1', disorder=False)
        self.assertTrue(report.passed, report.metrics)
        self.assertLessEqual(report.metrics['bias_sup'], 0.01)
        self.assertLess(report.metrics['corrected_sup'], 1e-12)


class SampledCheckTests(SimpleTestCase):
    def test_characteristic_function(self):
        report = check_theorem1_charfn(side=64, n_samples=200, t_max=2.0,
                                       t_step=0.5, seed=3)
        self.assertTrue(report.passed, report.metrics)
        self.assertEqual(report.seed, 3)

    def test_density(self):
        report = check_theorem1_dos(side=200, n_samples=60, grid='-4:4:0.5',
                                    max_sup=0.02, z_p95=4.0)
        self.assertTrue(report.passed, report.metrics)

    def test_density_with_disorder_and_broadening_exchanged(self):
        report = check_theorem1_dos(scale=0.1, broaden=1.0, side=200,
                                    n_samples=60, grid='-4:4:0.5',
                                    max_sup=0.02, z_p95=4.0)
        self.assertTrue(report.passed, report.metrics)

    def test_density_needs_broadening(self):
        with self.assertRaises(InvalidArgumentError):
            check_theorem1_dos(broaden=0.0)

    def test_density_on_the_square_lattice(self):
        report = check_theorem1_dos(dim=2, side=20, n_samples=20,
                                    grid='-6:6:1', max_sup=0.03, z_cap=5.0)
        self.assertTrue(report.passed, report.metrics)

    def test_bethe(self):
        report = check_bethe(depth=5, n_samples=80, grid='-2:2:0.5',
                             max_sup=0.05)
        self.assertTrue(report.passed, report.metrics)
        self.assertGreater(report.metrics['bias_sup'], 0.0)

    def test_continuum(self):
        report = check_continuum_ids(length=40, h=0.1, n_samples=40,
                                     grid='0:3:0.5', max_sup=0.15)
        self.assertTrue(report.passed, report.metrics)

    def test_continuum_without_disorder(self):
        report = check_continuum_ids(disorder=False, n_samples=1,
                                     max_sup=0.01)
        self.assertTrue(report.passed, report.metrics)

    def test_continuum_grid_above_mesh_limit(self):
        with self.assertRaises(InvalidArgumentError):
            check_continuum_ids(h=0.1, grid='0:6:0.5')


class RunCheckTests(SimpleTestCase):
    def test_registry(self):
        self.assertEqual(set(QUICK), set(CHECKS))
        self.assertEqual(PRESETS, ('full', 'quick'))

    def test_unknown_name(self):
        with self.assertRaises(InvalidArgumentError):
            run_check('theorem2')

    def test_unknown_preset(self):
        with self.assertRaises(InvalidArgumentError):
            run_check('semigroup', preset='huge')

    def test_options_override_the_preset(self):
        report = run_check('semigroup', preset='quick', window=2.0,
                           step=0.05)
        self.assertEqual(report.parameters['padding'], 30.0)
        self.assertEqual(report.parameters['window'], 2.0)

    def test_forced_threshold_fails(self):
        report = run_check('semigroup', window=2.0, step=0.05, padding=20.0,
                           force_threshold=0.0)
        self.assertFalse(report.passed)
