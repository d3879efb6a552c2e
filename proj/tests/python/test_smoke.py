# Copyright 2026 The bloch-lab Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math
import unittest

import numpy as np

import bloch_lab as bl


class SmokeTest(unittest.TestCase):
    def test_states(self):
        rho = bl.maximally_mixed([2, 2])
        self.assertEqual(rho.dims, [2, 2])
        self.assertAlmostEqual(rho.purity, 0.25)
        bell = bl.max_entangled(2)
        self.assertAlmostEqual(bell.purity, 1.0)
        half = bl.partial_trace(bell, [0])
        np.testing.assert_allclose(half.matrix, np.eye(2) / 2, atol=1e-14)
        sample = bl.random_state([2, 3], "hs", seed=42, index=3)
        again = bl.random_state([2, 3], "hs", seed=42, index=3)
        np.testing.assert_array_equal(sample.matrix, again.matrix)
        psi = bl.purify(sample)
        self.assertEqual(psi.dims, [2, 3, 6])
        np.testing.assert_allclose(bl.partial_trace(psi, [0, 1]).matrix, sample.matrix, atol=1e-12)

    def test_constructor_validates(self):
        with self.assertRaises(bl.BlochLabError) as ctx:
            bl.DensityMatrix([2], np.eye(2))
        self.assertIn("invalid-state", str(ctx.exception))
        self.assertTrue(issubclass(bl.BlochLabError, ValueError))

    def test_basis(self):
        doc = bl.basis(4, cut=2)
        self.assertEqual(doc["cut"], 2)
        self.assertEqual(len(doc["elements"]), 16)
        self.assertIsNone(bl.basis(3)["cut"])

    def test_tensor_and_purity(self):
        norms = bl.tensor_norms(bl.max_entangled(2))
        by_subset = {tuple(s["v"]): s["norm_sq"] for s in norms["subsets"]}
        self.assertAlmostEqual(by_subset[(0, 1)], 3.0)
        rho = bl.random_state([2, 3], seed=5)
        direct = float(np.trace(rho.matrix @ rho.matrix).real)
        self.assertAlmostEqual(bl.purity_from_tensor(rho), direct, places=12)
        self.assertAlmostEqual(bl.split_purity(rho), direct, places=12)
        split = bl.tensor_norms(rho, split=(1, 2))
        self.assertAlmostEqual(split["c0"] + split["c0p"], 1.0, places=12)

    def test_monotone(self):
        self.assertAlmostEqual(bl.correlation_monotone(bl.max_entangled(2))["value"], 1.0)
        psi = bl.random_state([2, 4], "pure-haar", seed=3)
        got = bl.correlation_monotone(psi, restarts=4)["value"]
        self.assertAlmostEqual(got, bl.monotone_pure_exact(psi), delta=1e-8)

    def test_entropies(self):
        rho = bl.maximally_mixed([2, 2])
        self.assertAlmostEqual(bl.linear_entropy(rho), 0.75)
        self.assertAlmostEqual(bl.tsallis(rho, 2), 0.75)
        self.assertAlmostEqual(bl.renyi(rho, 2), 2.0)
        self.assertAlmostEqual(bl.tsallis(rho, 1), math.log(4))

    def test_check(self):
        report = bl.check(bl.maximally_mixed([2, 2]), "gen-pseudo")
        self.assertTrue(report["holds"])
        self.assertAlmostEqual(report["slack"], 0.0, places=12)
        with self.assertRaises(bl.BlochLabError):
            bl.check(bl.maximally_mixed([2, 2]), "dim-ssa")

    def test_verify(self):
        report = bl.verify([2, 2], samples=200, inequalities="gen-pseudo,subadd")
        self.assertEqual([r["violations"] for r in report["results"]], [0, 0])
        negated = bl.verify([2, 2], samples=50, inequalities="gen-pseudo", negate=True)
        self.assertGreater(negated["results"][0]["violations"], 0)
        self.assertEqual(bl.verify([2, 2, 2], samples=10, inequalities="dim-ssa", threads=1),
                         bl.verify([2, 2, 2], samples=10, inequalities="dim-ssa", threads=3))

    def test_sweep(self):
        table = bl.sweep("fig1", dims=[2], points=11)
        self.assertEqual(table["columns"], ["t", "excess_d2"])
        self.assertAlmostEqual(table["rows"][0][1], 4 / 3)
        self.assertAlmostEqual(table["rows"][-1][1], 0.0)
        self.assertEqual(bl.sweep("figB", dims=[2, 2, 2], points=9)["removed_by_genpseudo"], 0)


if __name__ == "__main__":
    unittest.main()
