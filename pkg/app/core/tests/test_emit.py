import json
import math
from fractions import Fraction

import numpy as np

from django.test import SimpleTestCase

from core.emit import Table, jsonable, render_csv, render_json
from dist_core.dist import new_dist
from majorization.order import OrderVerdict


class JsonTests(SimpleTestCase):

    def test_exact_and_special_values(self) -> None:
        value = {
            "p": new_dist(["2/3", "1/3"]),
            "inf": math.inf,
            "nan": np.float64("nan"),
            "verdict": OrderVerdict.STRICTLY_LESS,
            "opens": [frozenset({2, 1})],
            "n": np.int64(3),
        }
        self.assertEqual(jsonable(value), {
            "p": ["2/3", "1/3"],
            "inf": None,
            "nan": None,
            "verdict": "StrictlyLess",
            "opens": [[1, 2]],
            "n": 3,
        })

    def test_document(self) -> None:
        """Test the compact result/meta layout"""
        text = render_json({"beta": Fraction(1, 2)}, seed=7, version="1.0.0")
        self.assertEqual(
            text,
            '{"result":{"beta":"1/2"},'
            '"meta":{"seed":7,"version":"1.0.0"}}'
        )
        self.assertEqual(json.loads(text)["meta"]["seed"], 7)

    def test_table_as_records(self) -> None:
        table = Table(("w", "lhs"), [(0.5, math.nan)])
        self.assertEqual(jsonable(table), [{"w": 0.5, "lhs": None}])


class CsvTests(SimpleTestCase):

    def test_table(self) -> None:
        table = Table(("step", "lo", "hi"), [
            (0, Fraction(1), Fraction(2)), (1, Fraction(1), Fraction(3, 2))
        ])
        self.assertEqual(render_csv(table),
                         "step,lo,hi\n0,1,2\n1,1,3/2\n")

    def test_mapping_and_values(self) -> None:
        self.assertEqual(render_csv({"lo": 0.25, "hi": math.inf}),
                         "lo,hi\n0.25,nan\n")
        self.assertEqual(render_csv([True, 2]), "value\ntrue\n2\n")
        self.assertEqual(render_csv(1.5), "value\n1.5\n")

    def test_lists_in_cells(self) -> None:
        self.assertEqual(render_csv({"ci": (0.5, 1.5)}), "ci\n0.5 1.5\n")
