import numpy as np
from django.test import SimpleTestCase

from core.exceptions import InvalidArgumentError, OutsideStripError
from free_models.lattice import (
    LatticeFreeModel, lattice_dos_smoothed, lattice_free_charfn,
    lattice_green_smoothed, lattice_offdiag_charfn,
)
from ensemble.builders import LatticeBoxSpec, build_lattice
from free_models.special import bessel_j, bessel_j_signed
from measures.cauchy import CauchyKernel, tail_mass
from measures.spectral import EnergyGrid, GridDensity, smear_spectrum
from spectra.eigen import eig_sym, site_averaged_measure


def chain_density(scale, energy):
    """Closed form in d = 1 from the Laplace transform 1 / sqrt(s^2 + 4)."""
    energy = np.asarray(energy, dtype=complex)
    lower = 1 / np.sqrt((scale - 1j * energy) ** 2 + 4)
    upper = 1 / np.sqrt((scale + 1j * energy) ** 2 + 4)
    return (lower + upper) / (2 * np.pi)


class BesselTests(SimpleTestCase):
    def test_reference_values(self):
        self.assertAlmostEqual(bessel_j(0, 1.0), 0.7651976866, places=9)
        self.assertAlmostEqual(bessel_j(1, 1.0), 0.4400505857, places=9)
        self.assertAlmostEqual(bessel_j(0, 4.0), -0.3971498099, places=9)

    def test_recurrence(self):
        x = np.linspace(0.5, 20.0, 40)
        for n in range(1, 21):
            with self.subTest(n=n):
                residual = (bessel_j(n - 1, x) + bessel_j(n + 1, x)
                            - 2 * n / x * bessel_j(n, x))
                self.assertLessEqual(np.max(np.abs(residual)), 1e-10)

    def test_first_zero(self):
        self.assertLess(abs(bessel_j(0, 2.404825557695773)), 1e-12)

    def test_order_validation(self):
        for order in (-1, 0.5):
            with self.subTest(order=order):
                with self.assertRaises(InvalidArgumentError):
                    bessel_j(order, 1.0)

    def test_negative_orders(self):
        self.assertAlmostEqual(bessel_j_signed(-1, 1.0), -0.4400505857,
                               places=9)
        self.assertAlmostEqual(bessel_j_signed(-2, 1.0), bessel_j(2, 1.0),
                               places=14)


class LatticeCharfnTests(SimpleTestCase):
    def test_diagonal(self):
        self.assertAlmostEqual(
            lattice_free_charfn(LatticeFreeModel(1), 0.5), 0.7651976866,
            places=9,
        )
        self.assertAlmostEqual(
            lattice_free_charfn(LatticeFreeModel(2), 0.5), 0.7651976866 ** 2,
            places=9,
        )

    def test_neighbour(self):
        model = LatticeFreeModel(1)
        for site in ((1,), (-1,)):
            with self.subTest(site=site):
                value = lattice_offdiag_charfn(model, site, 0.5)
                self.assertAlmostEqual(value, 0.4400505857j, places=9)

    def test_dimension_mismatch(self):
        with self.assertRaises(InvalidArgumentError):
            lattice_offdiag_charfn(LatticeFreeModel(2), (1,), 0.5)

    def test_invalid_dimension(self):
        with self.assertRaises(InvalidArgumentError):
            LatticeFreeModel(0)


class LatticeDensityTests(SimpleTestCase):
    def test_center_of_the_chain(self):
        model = LatticeFreeModel(1)
        self.assertAlmostEqual(
            lattice_dos_smoothed(model, CauchyKernel(1.0), 0.0),
            1 / (np.pi * np.sqrt(5.0)), places=8,
        )
        self.assertAlmostEqual(
            lattice_dos_smoothed(model, CauchyKernel(0.5), 0.0),
            1 / (np.pi * np.sqrt(4.25)), places=8,
        )

    def test_chain_closed_form_on_grid(self):
        energies = np.linspace(-5.0, 5.0, 21)
        values = lattice_dos_smoothed(
            LatticeFreeModel(1), CauchyKernel(0.3), energies
        )
        np.testing.assert_allclose(
            values, chain_density(0.3, energies).real, atol=1e-8
        )

    def test_complex_energy_inside_strip(self):
        energy = 0.3 + 0.2j
        value = lattice_dos_smoothed(
            LatticeFreeModel(1), CauchyKernel(1.0), energy
        )
        self.assertAlmostEqual(value, chain_density(1.0, energy), places=8)

    def test_outside_strip(self):
        for energy in (0.5 + 1.0j, 0.5 - 1.5j):
            with self.subTest(energy=energy):
                with self.assertRaises(OutsideStripError):
                    lattice_dos_smoothed(
                        LatticeFreeModel(1), CauchyKernel(1.0), energy
                    )

    def test_square_lattice_is_symmetric_and_positive(self):
        energies = np.array([-3.0, -1.0, 0.0, 1.0, 3.0])
        values = lattice_dos_smoothed(
            LatticeFreeModel(2), CauchyKernel(0.5), energies
        )
        self.assertTrue(np.all(values > 0))
        np.testing.assert_allclose(values, values[::-1], atol=1e-10)

    def test_total_mass(self):
        kernel = CauchyKernel(1.0)
        grid = EnergyGrid(-62.0, 62.0, 0.05)
        density = GridDensity(
            grid, lattice_dos_smoothed(LatticeFreeModel(1), kernel,
                                       grid.points)
        )
        self.assertAlmostEqual(density.mass() + tail_mass(kernel, 60.0), 1.0,
                               delta=2e-3)

    def test_large_periodic_box(self):
        kernel = CauchyKernel(1.0)
        grid = EnergyGrid(-4.0, 4.0, 0.25)
        eig = eig_sym(build_lattice(LatticeBoxSpec(1, 4096)), vectors=False)
        box = smear_spectrum(site_averaged_measure(eig), kernel, grid)
        np.testing.assert_allclose(
            box.values,
            lattice_dos_smoothed(LatticeFreeModel(1), kernel, grid.points),
            atol=0.01,
        )

    def test_green_function(self):
        energies = np.array([-1.0, 0.0, 2.5])
        green = lattice_green_smoothed(
            LatticeFreeModel(1), CauchyKernel(1.0), energies
        )
        expected = 1j / np.sqrt((1.0 - 1j * energies) ** 2 + 4)
        np.testing.assert_allclose(green, expected, atol=1e-8)
        np.testing.assert_allclose(
            green.imag / np.pi,
            lattice_dos_smoothed(
                LatticeFreeModel(1), CauchyKernel(1.0), energies
            ),
            atol=1e-9,
        )
