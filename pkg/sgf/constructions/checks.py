"""Exact comparisons recorded by constructions and verifiers."""

# Copyright (C) 2026 sgf contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing,
# software distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions
# and limitations under the License.

import operator
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, List, Optional, Union

Number = Union[int, Fraction]

RELATIONS = {
    "<=": operator.le,
    "<": operator.lt,
    "==": operator.eq,
    ">=": operator.ge,
}


@dataclass(frozen=True)
class Check:
    """One named comparison; ``passed`` is None when the check was skipped."""

    name: str
    passed: Optional[bool]
    relation: str = ""
    lhs: Any = None
    rhs: Any = None
    note: str = ""

    @property
    def skipped(self) -> bool:
        """True for a check that could not run."""
        return self.passed is None


def compare(name: str, lhs: Number, relation: str, rhs: Number, note: str = "") -> Check:
    """Record ``lhs <relation> rhs`` evaluated exactly."""
    return Check(name, bool(RELATIONS[relation](lhs, rhs)), relation, lhs, rhs, note)


def assert_true(name: str, condition: bool, note: str = "") -> Check:
    """Record a boolean condition."""
    return Check(name, bool(condition), note=note)


def skip(name: str, note: str) -> Check:
    """Record a check that could not run."""
    return Check(name, None, note=note)


@dataclass
class VerificationReport:
    """Outcome of a verification: every check with both sides of its comparison."""

    kind: str
    checks: List[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """True when no check failed."""
        return all(check.passed is not False for check in self.checks)

    @property
    def failed(self) -> List[Check]:
        """Checks that failed."""
        return [check for check in self.checks if check.passed is False]

    def add(self, check: Check) -> Check:
        """Append a check and return it."""
        self.checks.append(check)
        return check

    def extend(self, checks: List[Check]) -> None:
        """Append several checks."""
        self.checks.extend(checks)
