# Copyright 2026 The symdecomp authors
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

"""Exact decomposition of polynomials under the natural symmetric group action.

The heavy lifting lives in the compiled extension ``symdecomp._core``; this
package adds a thin layer returning plain dicts for the report-style calls.
"""

import json as _json

from ._core import (
    ArgumentError,
    Decomposition,
    DimensionError,
    ParseError,
    Polynomial,
    __version__,
    canonical,
    classify_reduced,
    decompose,
    decomposition_from_json,
    elementary_symmetric,
    glm,
    reduce,
)
from . import _core as _impl

__all__ = [
    "ArgumentError",
    "Decomposition",
    "DimensionError",
    "ParseError",
    "Polynomial",
    "__version__",
    "canonical",
    "classify_reduced",
    "decompose",
    "decomposition_from_json",
    "dimension_audit",
    "elementary_symmetric",
    "glm",
    "graded_basis_check",
    "hilbert_check",
    "module_table",
    "reduce",
    "roundtrip_suite",
    "verify",
]


def module_table(n):
    """Per index set I containing n: e_I', dim V_I, stabilizer order, transversal size."""
    return _json.loads(_impl.module_table_json(n))


def graded_basis_check(n, degree):
    return _json.loads(_impl.graded_basis_check_json(n, degree))


def hilbert_check(n, max_degree):
    return _json.loads(_impl.hilbert_check_json(n, max_degree))


def dimension_audit(n):
    return _json.loads(_impl.dimension_audit_json(n))


def roundtrip_suite(n, max_degree, trials, seed):
    return _json.loads(_impl.roundtrip_suite_json(n, max_degree, trials, seed))


def verify(n, max_degree=8, trials=200, seed=0):
    """All four verification suites; returns a combined report dict."""
    report = {
        "n": n,
        "max_degree": max_degree,
        "seed": seed,
        "trials": trials,
        "graded": [graded_basis_check(n, d) for d in range(max_degree + 1)],
        "hilbert": hilbert_check(n, max_degree),
        "dimension_audit": dimension_audit(n),
        "roundtrip": roundtrip_suite(n, max_degree, trials, seed),
    }
    ok = (
        all(g["status"] == "pass" for g in report["graded"])
        and report["hilbert"]["status"] == "pass"
        and report["dimension_audit"]["status"] == "pass"
        and report["roundtrip"]["status"] == "pass"
    )
    report["status"] = "pass" if ok else "fail"
    return report
