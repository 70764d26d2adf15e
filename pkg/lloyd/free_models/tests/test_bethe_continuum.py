import numpy as np
from django.test import SimpleTestCase
from scipy.integrate import quad

from core.exceptions import InvalidArgumentError, OutsideStripError
from free_models.bethe import (
    BetheFreeModel, bethe_dos_smoothed, kesten_mckay_density,
)
from free_models.continuum import (
    ContinuumFreeModel, continuum_free_ids, continuum_ids_smoothed,
)
from measures.cauchy import CauchyKernel, cauchy_density


class KestenMcKayTests(SimpleTestCase):
    def test_center(self):
        model = BetheFreeModel(2)
        self.assertAlmostEqual(model.band_edge, 2 * np.sqrt(2), places=14)
        self.assertAlmostEqual(kesten_mckay_density(model, 0.0),
                               np.sqrt(2.0) / (3 * np.pi), places=12)

    def test_vanishes_outside_band(self):
        model = BetheFreeModel(3)
        values = kesten_mckay_density(model, [-4.0, 3.5, 10.0])
        np.testing.assert_array_equal(values, 0.0)

    def test_unit_mass(self):
        for branching in (2, 3, 5):
            with self.subTest(branching=branching):
                model = BetheFreeModel(branching)
                edge = model.band_edge
                mass, _ = quad(lambda x: kesten_mckay_density(model, x),
                               -edge, edge)
                self.assertAlmostEqual(mass, 1.0, places=7)

    def test_branching_validation(self):
        for branching in (1, 2.5):
            with self.subTest(branching=branching):
                with self.assertRaises(InvalidArgumentError):
                    BetheFreeModel(branching)


class BetheSmoothedTests(SimpleTestCase):
    def test_small_width_recovers_kesten_mckay(self):
        value = bethe_dos_smoothed(BetheFreeModel(2), CauchyKernel(0.001),
                                   0.0)
        self.assertAlmostEqual(value, 0.15005, delta=1e-2)

    def test_matches_direct_convolution(self):
        model = BetheFreeModel(2)
        kernel = CauchyKernel(1.0)
        edge = model.band_edge
        for energy in (-3.5, 0.0, 0.5, 2.0):
            with self.subTest(energy=energy):
                direct, _ = quad(
                    lambda x: kesten_mckay_density(model, x)
                    * cauchy_density(kernel, energy - x),
                    -edge, edge, epsabs=1e-12,
                )
                self.assertAlmostEqual(
                    bethe_dos_smoothed(model, kernel, energy), direct,
                    places=8,
                )

    def test_real_axis_of_complex_evaluation(self):
        model = BetheFreeModel(3)
        kernel = CauchyKernel(0.5)
        real = bethe_dos_smoothed(model, kernel, 1.0)
        continued = bethe_dos_smoothed(model, kernel, 1.0 + 0.0j)
        self.assertAlmostEqual(continued, real, places=12)

    def test_outside_strip(self):
        with self.assertRaises(OutsideStripError):
            bethe_dos_smoothed(BetheFreeModel(2), CauchyKernel(0.5),
                               1.0 + 0.5j)


class ContinuumTests(SimpleTestCase):
    def test_free_ids(self):
        model = ContinuumFreeModel()
        np.testing.assert_allclose(
            continuum_free_ids(model, [-1.0, 0.0, 4.0]), [0.0, 0.0, 2 / np.pi]
        )

    def test_smoothed_matches_direct_convolution(self):
        kernel = CauchyKernel(0.2)
        for energy in (-1.0, 1.0, 3.0):
            with self.subTest(energy=energy):
                direct, _ = quad(
                    lambda e: np.sqrt(e) / np.pi
                    * cauchy_density(kernel, energy - e),
                    0.0, np.inf, epsabs=1e-10, limit=400,
                )
                self.assertAlmostEqual(
                    continuum_ids_smoothed(ContinuumFreeModel(), kernel,
                                           energy),
                    direct, places=6,
                )

    def test_smoothed_is_increasing(self):
        values = continuum_ids_smoothed(
            ContinuumFreeModel(), CauchyKernel(0.2), np.linspace(-1, 4, 11)
        )
        self.assertTrue(np.all(np.diff(values) > 0))
        self.assertTrue(values[0] > 0)
