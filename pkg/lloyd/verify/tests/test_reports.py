import math

from django.test import SimpleTestCase

from verify.reports import CheckReport, format_table


def report(**metrics):
    return CheckReport(
        'semigroup', {'dim': 1}, metrics, {'sup_distance': 1e-4}, seed=7,
    )


class CheckReportTests(SimpleTestCase):
    def test_pass_and_fail(self):
        self.assertTrue(report(sup_distance=5e-5).passed)
        self.assertTrue(report(sup_distance=1e-4).passed)
        self.assertFalse(report(sup_distance=2e-4).passed)

    def test_non_finite_or_missing_metrics_fail(self):
        for metrics in ({'sup_distance': math.nan},
                        {'sup_distance': math.inf},
                        {'other': 0.0}):
            with self.subTest(metrics=metrics):
                self.assertFalse(report(**metrics).passed)
                self.assertEqual(report(**metrics).failures(),
                                 ['sup_distance'])

    def test_forced_threshold(self):
        forced = report(sup_distance=5e-5).with_threshold(0.0)
        self.assertFalse(forced.passed)
        self.assertEqual(forced.thresholds, {'sup_distance': 0.0})

    def test_record_leaves_out_runtime(self):
        record = report(sup_distance=5e-5).as_dict()
        self.assertNotIn('runtime', record)
        self.assertEqual(record['seed'], 7)
        self.assertTrue(record['passed'])

    def test_table(self):
        table = format_table([report(sup_distance=2e-4)])
        self.assertIn('sup_distance', table)
        self.assertIn('FAIL', table)
        self.assertTrue(table.startswith('check'))
