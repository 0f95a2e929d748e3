# Copyright 2026 The umlprof Authors
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


"""Profile-aware UML model checking: profiles, models, constraints, diagrams."""

from umlprof._core import (
    Element,
    Invalid,
    UmlprofError,
    builtin_class_model,
    builtin_profile,
    builtin_sequence_model,
    evaluate,
    format_constraint,
    lint_profile,
    normalize_model,
    normalize_profile,
    parse_profile,
    render,
    run_cli,
    validate,
)

__version__ = "0.1.0"

__all__ = [
    "Element",
    "Invalid",
    "UmlprofError",
    "builtin_class_model",
    "builtin_profile",
    "builtin_sequence_model",
    "evaluate",
    "format_constraint",
    "lint_profile",
    "normalize_model",
    "normalize_profile",
    "parse_profile",
    "render",
    "run_cli",
    "validate",
]
