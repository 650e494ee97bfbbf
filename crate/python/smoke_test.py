# Licensed under the Apache License, Version 2.0 (the "License"); you may
# not use this file except in compliance with the License. You may obtain
# a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.

"""Smoke test for the pykrontri extension module.

Build and install first, e.g.
    pip install --no-build-isolation ./crates/python
then run
    python python/smoke_test.py
"""

import json
import os
import sys
import tempfile

import pykrontri as kt


def check(cond, msg):
    if not cond:
        print(f"FAIL {msg}")
        sys.exit(1)
    print(f"ok   {msg}")


def main():
    k4 = kt.Graph.clique(4)
    check(k4.triangles() == 4, "K4 has 4 triangles")

    prod = kt.Product(k4, k4)
    check(prod.n == 16 and prod.regime == "none", "K4 x K4 has 16 vertices, no loops")
    check(prod.degree(1) == 9, "degree 9")
    check(prod.vertex_triangles(1) == 18, "18 triangles per vertex")
    check(prod.edge_triangles(1, 6) == 4, "4 triangles per edge")
    check(prod.triangles() == 96, "96 triangles in total")

    members, edges = prod.egonet(1)
    check(len(members) == 9 and len(edges) == 18, "egonet edge count equals vertex triangles")

    full = prod.edges()
    check(full == prod.edges(hi=2) + prod.edges(lo=3), "block ranges concatenate to the full stream")

    hub = kt.Graph.hub_cycle()
    check(set(hub.trussness().values()) == {3}, "hub-cycle trussness is 3 everywhere")
    try:
        kt.Product(k4, hub).trussness(1, 7)
        check(False, "hub-cycle right factor rejected")
    except kt.PreconditionError:
        check(True, "hub-cycle right factor rejected")

    b = kt.Graph.trianglecap_pa(20, 3)
    a = kt.Graph.erdos_renyi(6, 0.5, 1)
    pt = kt.Product(a, b)
    p, q = pt.edges()[0]
    check(pt.trussness(p, q) in (2, *a.trussness().values()), "product trussness comes from the left factor")

    looped = kt.Product(k4, k4.with_all_loops())
    check(looped.regime == "b_only", "A x (A + I) regime")
    check(looped.triangles() == 4 * (6 * 4 + 6 * 6 + 4), "A x (A + I) triangle total")

    c3 = kt.Graph.directed_cycle(3)
    dp = kt.Product(c3, kt.Graph.clique(3))
    check(dp.directed_vertex("st+", 1) == 2, "directed cycle census")
    rec = dp.vertex_record(1)
    check(rec["directed"]["st+"] == 2, "vertex record carries the directed profile")

    with tempfile.TemporaryDirectory() as d:
        pa, pb, pm = (os.path.join(d, f) for f in ("a.txt", "b.txt", "m.json"))
        k4.write(pa)
        hub.write(pb)
        manifest = kt.write_manifest(pa, pb, pm, seeds=[7])
        check(manifest["totals"]["triangles"] == str(6 * 4 * hub.triangles()), "manifest totals")
        opened = kt.Product.open(pm)
        check(opened.summary() == manifest["totals"], "manifest reopens with the same totals")
        with open(pm) as f:
            check(json.load(f)["seeds"] == [7], "seeds recorded")

    passed, line = kt.validate("undirected-all-regimes", seed=7, instances=5)
    check(passed, line)
    print("smoke test passed")


if __name__ == "__main__":
    main()
