# Copyright 2026 The certilab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import certilab


def path(n):
    return certilab.Graph(n, [(i, i + 1) for i in range(n - 1)])


def test_hop_diameter():
    g = path(5)
    assert certilab.hop_diameter(g) == 4
    assert certilab.hop_diameter(g, [(0, 4)]) == 3


def test_hull():
    assert certilab.hull_positive_vertices("5") == [(4, 3), (3, 4)]
    assert certilab.hull_positive_vertices("2") == []


def test_certification():
    g = path(5)
    assert certilab.is_certified(g, [(0, 2)])
    assert not certilab.is_certified(g, [(0, 3)])
    assert certilab.brute_force_cert_complexity(g, [(0, 4)]) == 3


def test_algorithms_certified():
    inst = certilab.generate("random-dag", "n=40,m=90", seed=3)
    g = certilab.Graph(inst["n"], [tuple(e[:2]) for e in inst["edges"]])
    for h in (certilab.fineman(g, 1), certilab.jls(g, 2.0, 1)):
        assert certilab.is_certified(g, h)
        assert certilab.hop_diameter(g, h) <= certilab.hop_diameter(g)


def test_run_and_verify():
    inst = certilab.generate("random-dag", "n=30,m=60", seed=1)
    results = certilab.run(inst, "fineman", seeds=[1, 2])
    assert len(results["runs"]) == 2
    report = certilab.verify(inst, results)
    assert all(row["checks"] for row in report["rows"])


def test_errors_surface():
    try:
        certilab.topological_order(certilab.Graph(2, [(0, 1), (1, 0)]))
    except certilab.Error:
        return
    raise AssertionError("cycle not reported")
