# Copyright 2026 The pareto-po Authors
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

"""Exact Pareto optimality tests for allocations of indivisible goods.

Instances, assignments and verdicts are the same JSON documents the
pareto-po CLI reads and writes. Each function takes either a dict or JSON
text and returns dicts.
"""

import json

from . import _core
from ._core import ParetoError, ResourceError, ValidationError

__all__ = [
    "ParetoError",
    "ResourceError",
    "ValidationError",
    "check",
    "generate",
    "improve",
    "solve",
    "solve_targets",
    "verify",
]

MODES = ("additive", "lex", "bivalued", "possible-po", "necessary-po")


def _text(doc):
    if doc is None or isinstance(doc, str):
        return doc
    return json.dumps(doc)


def check(instance, assignment=None, mode="additive", max_table=_core.DEFAULT_MAX_TABLE):
    """Verdict dict: {"mode", "optimal", "certificate", ...}.

    Without `assignment` the instance's endowment is tested.
    """
    return json.loads(_core.check(_text(instance), _text(assignment), mode, max_table))


def verify(instance, document, assignment=None):
    """Re-validates a verdict or bare certificate against the assignment."""
    return _core.verify(_text(instance), _text(assignment), _text(document))


def improve(instance, assignment=None, mode="lex", to_optimal=False):
    """(assignment dict, rounds) or None when no improving step exists.

    Only the lex and bivalued modes produce improvements.
    """
    r = _core.improve(_text(instance), _text(assignment), mode, to_optimal)
    if r is None:
        return None
    text, rounds = r
    return json.loads(text), rounds


def solve(instance, max_table=_core.DEFAULT_MAX_TABLE):
    """Individually rational, Pareto optimal assignment for an additive instance."""
    return json.loads(_core.solve(_text(instance), max_table))


def generate(targets, scale=_core.DEFAULT_SCALE):
    """(instance dict, endowment dict) for sorted 2NMTS target sums."""
    inst, endowment = _core.generate(list(targets), scale)
    return json.loads(inst), json.loads(endowment)


def solve_targets(targets, max_k=_core.DEFAULT_MAX_SOLVE_K):
    """(pi, theta) with pi[i] + theta[i] == targets[i], or None."""
    return _core.solve_targets(list(targets), max_k)
