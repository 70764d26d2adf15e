import io
import json

import numpy as np
from django.test import SimpleTestCase

from core.output import format_number, plain, write_csv, write_json


class OutputTests(SimpleTestCase):
    def test_numbers(self):
        self.assertEqual(format_number(np.int64(3)), '3')
        self.assertEqual(format_number(0.1), '0.1')
        self.assertEqual(format_number(1 / 3), '0.333333333333')

    def test_csv(self):
        stream = io.StringIO()
        write_csv(stream, ['a', 'b'], [[1.0, 2.0], [0.5, -0.25]])
        self.assertEqual(stream.getvalue(), 'a,b\n1,0.5\n2,-0.25\n')

    def test_csv_columns_must_match(self):
        with self.assertRaises(ValueError):
            write_csv(io.StringIO(), ['a', 'b'], [[1.0], [1.0, 2.0]])

    def test_json_is_sorted_and_numpy_aware(self):
        stream = io.StringIO()
        write_json(stream, {'b': np.float64(0.5), 'a': np.arange(2)})
        self.assertEqual(json.loads(stream.getvalue()),
                         {'a': [0, 1], 'b': 0.5})
        self.assertTrue(stream.getvalue().endswith('}\n'))

    def test_plain(self):
        self.assertEqual(plain({'n': np.int64(2)}), {'n': 2})
