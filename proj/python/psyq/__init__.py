# Copyright 2026 The psyq Authors
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

"""Psyquandle colorings and Boltzmann weight invariants."""

from ._psyq import (
    AdequacyError,
    CompatibilityError,
    Diagram,
    Error,
    InvalidPsyquandleError,
    InvalidWeightError,
    ParseError,
    Psyquandle,
    UnknownDiagramError,
    WeightPair,
    catalog_names,
    check_axioms,
    colorings,
    counting_invariant,
    enhanced_polynomial,
    invariant_json,
    suite_table,
    validate_weight_pair,
    weight_space_count,
)

__version__ = "0.1.0"

__all__ = [
    "AdequacyError",
    "CompatibilityError",
    "Diagram",
    "Error",
    "InvalidPsyquandleError",
    "InvalidWeightError",
    "ParseError",
    "Psyquandle",
    "UnknownDiagramError",
    "WeightPair",
    "catalog_names",
    "check_axioms",
    "colorings",
    "counting_invariant",
    "enhanced_polynomial",
    "invariant_json",
    "suite_table",
    "validate_weight_pair",
    "weight_space_count",
]
