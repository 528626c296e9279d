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

"""Certified shortcut and hopset toolkit."""

from certilab._core import (
    Error,
    Graph,
    brr_greedy,
    brute_force_cert_complexity,
    chain_cover,
    fineman,
    generate,
    hop_diameter,
    hull_positive_vertices,
    is_certified,
    is_unique_path,
    jls,
    path_shortcut_diam2,
    run,
    topological_order,
    transitive_closure,
    verify,
)

__all__ = [
    "Error",
    "Graph",
    "brr_greedy",
    "brute_force_cert_complexity",
    "chain_cover",
    "fineman",
    "generate",
    "hop_diameter",
    "hull_positive_vertices",
    "is_certified",
    "is_unique_path",
    "jls",
    "path_shortcut_diam2",
    "run",
    "topological_order",
    "transitive_closure",
    "verify",
]
