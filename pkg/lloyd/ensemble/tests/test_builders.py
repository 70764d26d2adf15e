import io

import numpy as np
from django.test import SimpleTestCase
from scipy import sparse

from core.exceptions import InvalidArgumentError
from ensemble.builders import (
    BumpFamily, ContinuumSpec, LatticeBoxSpec, SymmetricOperator, TreeSpec,
    build_continuum, build_lattice, build_operator, build_tree, tree_parents,
)
from ensemble.disorder import draw_sample
from measures.cauchy import CauchyKernel


def degrees(operator):
    off_diagonal = operator.toarray() - np.diag(operator.matrix.diagonal())
    return off_diagonal.sum(axis=1)


class SymmetricOperatorTests(SimpleTestCase):
    def test_rejects_asymmetric_matrix(self):
        with self.assertRaises(InvalidArgumentError):
            SymmetricOperator(np.array([[0.0, 1.0], [0.0, 0.0]]))

    def test_rejects_non_square_and_non_finite(self):
        with self.assertRaises(InvalidArgumentError):
            SymmetricOperator(np.zeros((2, 3)))
        with self.assertRaises(InvalidArgumentError):
            SymmetricOperator(np.array([[np.inf]]))

    def test_triples(self):
        operator = SymmetricOperator(
            sparse.csr_matrix(np.array([[2.0, 1.0], [1.0, 0.0]]))
        )
        stream = io.StringIO()
        operator.write_triples(stream)
        self.assertEqual(stream.getvalue(), '0 0 2\n0 1 1\n')

    def test_fingerprint_follows_entries(self):
        spec = LatticeBoxSpec(1, 6)
        kernel = CauchyKernel(1.0)
        first = build_lattice(spec, draw_sample(kernel, 6, 0, 0))
        again = build_lattice(spec, draw_sample(kernel, 6, 0, 0))
        other = build_lattice(spec, draw_sample(kernel, 6, 0, 1))
        self.assertEqual(first.fingerprint(), again.fingerprint())
        self.assertNotEqual(first.fingerprint(), other.fingerprint())


class LatticeBuilderTests(SimpleTestCase):
    def test_periodic_chain(self):
        operator = build_lattice(LatticeBoxSpec(1, 5))
        np.testing.assert_array_equal(degrees(operator), 2.0)
        self.assertEqual(operator.toarray()[0, 4], 1.0)

    def test_dirichlet_chain(self):
        operator = build_lattice(LatticeBoxSpec(1, 5, 'dirichlet'))
        np.testing.assert_array_equal(degrees(operator),
                                      [1.0, 2.0, 2.0, 2.0, 1.0])

    def test_square_lattice(self):
        spec = LatticeBoxSpec(2, 4)
        operator = build_lattice(spec)
        self.assertEqual(operator.n, 16)
        np.testing.assert_array_equal(degrees(operator), 4.0)
        right = spec.site_index((1, 0))
        up = spec.site_index((0, 1))
        self.assertEqual(operator.toarray()[0, right], 1.0)
        self.assertEqual(operator.toarray()[0, up], 1.0)

    def test_couplings_on_the_diagonal(self):
        spec = LatticeBoxSpec(2, 3)
        sample = draw_sample(CauchyKernel(1.0), spec.site_count, 5, 0)
        operator = build_operator(spec, sample)
        np.testing.assert_array_equal(operator.matrix.diagonal(),
                                      sample.omegas)

    def test_wrong_sample_length(self):
        with self.assertRaises(InvalidArgumentError):
            build_lattice(LatticeBoxSpec(1, 5), np.zeros(4))

    def test_spec_validation(self):
        for arguments in ((0, 4), (1, 0), (1, 4, 'open')):
            with self.subTest(arguments=arguments):
                with self.assertRaises(InvalidArgumentError):
                    LatticeBoxSpec(*arguments)


class TreeBuilderTests(SimpleTestCase):
    def test_vertex_counts(self):
        spec = TreeSpec(2, 3)
        self.assertEqual(spec.site_count, 22)
        self.assertEqual(sum(size for _, size in spec.levels()), 22)
        self.assertEqual(TreeSpec(2, 14).site_count, 49150)
        self.assertEqual(TreeSpec(3, 0).site_count, 1)

    def test_degrees(self):
        spec = TreeSpec(2, 3)
        operator = build_tree(spec)
        counts = degrees(operator)
        leaves_start, leaves = spec.levels()[-1]
        np.testing.assert_array_equal(counts[:leaves_start], 3.0)
        np.testing.assert_array_equal(counts[leaves_start:], 1.0)
        self.assertEqual(leaves, 12)

    def test_parents(self):
        parents = tree_parents(TreeSpec(2, 2))
        np.testing.assert_array_equal(
            parents, [0, 0, 0, 1, 1, 2, 2, 3, 3]
        )


class ContinuumBuilderTests(SimpleTestCase):
    def test_hats_are_a_partition_of_unity(self):
        bumps = BumpFamily(5, 0.1)
        matrix = bumps.matrix()
        self.assertEqual(matrix.shape, (50, 5))
        np.testing.assert_allclose(
            np.asarray(matrix.sum(axis=1)).ravel(), 1.0, atol=1e-14
        )
        np.testing.assert_allclose(
            np.asarray(matrix.sum(axis=0)).ravel(), 10.0, atol=1e-12
        )

    def test_mesh_validation(self):
        for h in (0.3, 0.5, 0.0):
            with self.subTest(h=h):
                with self.assertRaises(InvalidArgumentError):
                    ContinuumSpec(5, h)

    def test_free_laplacian_annihilates_constants(self):
        operator = build_continuum(ContinuumSpec(4, 0.25))
        np.testing.assert_allclose(operator.matrix @ np.ones(16), 0.0,
                                   atol=1e-12)

    def test_constant_coupling_shifts_the_operator(self):
        spec = ContinuumSpec(4, 0.25)
        free = build_continuum(spec).toarray()
        shifted = build_continuum(spec, np.full(4, 0.7)).toarray()
        np.testing.assert_allclose(shifted - free, 0.7 * np.eye(16),
                                   atol=1e-12)
