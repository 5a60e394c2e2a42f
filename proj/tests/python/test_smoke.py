"""Smoke tests for the python bindings against the CMake-built extension."""

import os
import unittest

import permut

GROUP2 = """
name group2
size 2
op + 2
0 1
1 0
op - 1
0 1
op 0 0
0
"""

IMPL2 = """
name impl2
size 2
op -> 2
1 1
0 1
"""

LATTICE2 = """
name lattice2
size 2
op meet 2
0 0
0 1
op join 2
0 1
1 1
"""


class SmokeTest(unittest.TestCase):
    def setUp(self):
        self.group2 = permut.parse_algebra(GROUP2)
        self.impl2 = permut.parse_algebra(IMPL2)
        self.lattice2 = permut.parse_algebra(LATTICE2)

    def test_algebra_surface(self):
        self.assertEqual(self.group2.name, "group2")
        self.assertEqual(self.group2.size, 2)
        self.assertEqual(self.group2.signature, [("+", 2), ("-", 1), ("0", 0)])
        self.assertEqual(self.group2.apply("+", [1, 1]), 0)
        self.assertEqual(
            self.group2.eval("+(x, +(y, z))", ["x", "y", "z"], [1, 1, 0]), 0
        )

    def test_min_degree(self):
        self.assertEqual(permut.min_degree(self.group2), 2)
        self.assertEqual(permut.min_degree(self.impl2), 3)
        self.assertIsNone(permut.min_degree(self.lattice2))

    def test_witness_search_and_verify(self):
        terms = permut.hm_search(self.group2, 2)
        self.assertIsNotNone(terms)
        self.assertEqual(len(terms), 1)
        report = permut.verify_hm(self.group2, terms, 2)
        self.assertTrue(all(passed for _, passed, _ in report))

        self.assertIsNone(permut.hm_search(self.impl2, 2))
        pair = permut.hm_search(self.impl2, 3)
        self.assertEqual(len(pair), 2)

    def test_conversions_round_trip(self):
        terms = permut.hm_search(self.impl2, 3)
        nary = permut.ternary_to_nary(self.impl2, terms, 3)
        self.assertEqual(len(nary), 4)
        self.assertEqual(nary[0], "x0")
        self.assertEqual(nary[3], "x3")
        back = permut.nary_to_ternary(self.impl2, nary, 3)
        self.assertEqual(back, terms)

    def test_congruences(self):
        z4 = permut.parse_algebra(
            "name z4\nsize 4\nop + 2\n0 1 2 3\n1 2 3 0\n2 3 0 1\n3 0 1 2\n"
            "op - 1\n0 3 2 1\nop 0 0\n0\n"
        )
        cons = permut.congruences(z4)
        self.assertEqual(len(cons), 3)
        blocks = permut.principal_congruence(z4, 0, 2)
        self.assertEqual(blocks, [[0, 2], [1, 3]])
        self.assertEqual(
            permut.permutability_degree(z4, [0, 1, 2, 3], [0, 1, 0, 1]), 2
        )
        self.assertTrue(permut.algebra_permutability(z4, 2))

    def test_relation_calculus(self):
        self.assertEqual(permut.compose(3, [(0, 1)], [(1, 2)]), [(0, 2)])
        self.assertEqual(
            permut.alternating(4, [(0, 1), (2, 3)], [(1, 2)], 3), [(0, 3)]
        )
        self.assertEqual(permut.rel_power(3, [(0, 1), (1, 2)], 2), [(0, 2)])
        closure = permut.compatible_reflexive_closure(self.group2, [(0, 1)])
        self.assertEqual(len(closure), 4)  # full relation
        self.assertTrue(permut.is_compatible(self.group2, closure))

    def test_cross_checks(self):
        rts = permut.rts_symmetry_check(self.lattice2)
        self.assertFalse(all(sym for _, sym in rts))
        report = permut.hm3_report(self.group2, 2)
        self.assertTrue(report["all_pass"])
        self.assertEqual(len(report["relations"]), 2)
        self.assertIsNotNone(report["witness"])
        bad = permut.hm3_report(self.lattice2, 2)
        self.assertFalse(bad["all_pass"])
        self.assertIsNone(bad["witness"])

    def test_errors(self):
        with self.assertRaises(ValueError):
            permut.parse_algebra("name bad\nsize 2\nop + 2\n0 1 1\n")
        with self.assertRaises(RuntimeError):
            # enumeration budget: 5-element universe needs 2^25 subsets
            permut.rts_symmetry_check(permut.parse_algebra("name big\nsize 5\n"))

    def test_load_from_data_dir(self):
        data = os.environ.get("PERMUT_DATA")
        if not data:
            self.skipTest("PERMUT_DATA not set")
        alg = permut.load_algebra(os.path.join(data, "z2z2.alg"))
        self.assertEqual(permut.min_degree(alg), 2)


if __name__ == "__main__":
    unittest.main()
