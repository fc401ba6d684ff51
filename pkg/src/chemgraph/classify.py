"""Map an index's V-profile to its predicted extremal families.

Ten sign rules cover the regular cases; two named coefficient vectors
(the augmented Zagreb and Albertson indices) have dedicated results that
override the rules, including the two exceptional (n, m) classes of the
augmented Zagreb maximum.  Minimization is classified by running the same
rules on the complement index.  ``verify_characterization`` then checks
any prediction against the brute-force oracle, (n, m) class by class.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from .census import Census
from .families import FamilyId, chemical_size_range, family_censuses
from .indices import (
    BUILTINS,
    DEFAULT_EPS,
    IndexDefinition,
    VProfile,
    complement,
    v_profile,
)
from .oracle import extremal_censuses

UNION_F1_F3 = "F1∪F3"
UNCLASSIFIED = "Unclassified"

#: Dedicated conclusions for the two special coefficient vectors.
SPECIAL_AZAGREB_MAX = "aZagreb-max"   # F8 except two exceptional (n, m)
SPECIAL_AZAGREB_MIN = "aZagreb-min"   # F10
SPECIAL_ALBERTSON_MAX = "Albertson-max"  # F11
SPECIAL_ALBERTSON_MIN = "Albertson-min"  # F12

_AZAGREB_MAX_EXCEPTIONS = {
    (7, 8): frozenset({Census(1, 1, 0, 1, 5)}),
    (8, 8): frozenset({Census(2, 1, 0, 2, 3)}),
}


@dataclass(frozen=True)
class ClassificationRule:
    """Sign conditions on the V-profile implying one extremal family."""

    name: str
    conditions: tuple[tuple[str, int], ...]  # (profile entry, required sign)
    conclusion: str

    def fires(self, profile: VProfile) -> bool:
        return all(profile.sign_of(key) == want for key, want in self.conditions)


RULES: tuple[ClassificationRule, ...] = (
    ClassificationRule("F1", (("v1", 1), ("v2", 1), ("v5", 1)), "F1"),
    ClassificationRule("F2", (("v3", 1), ("v4", 1), ("v6", 1)), "F2"),
    ClassificationRule("F3", (("v1", 1), ("v6", 1), ("v7", 1), ("v8", 1)), "F3"),
    ClassificationRule("F4", (("v3", 1), ("v4", 1), ("v6", -1)), "F4"),
    ClassificationRule("F1∪F3", (("v1", 1), ("v5", 1), ("v7", 0)), UNION_F1_F3),
    ClassificationRule("F5", (("v3", 1), ("v4", 1), ("v6", 0)), "F5"),
    ClassificationRule("F6", (("v1", 1), ("v2", 1), ("v5", 0)), "F6"),
    ClassificationRule("F7", (("v3", 1), ("v6", 1), ("s2", 0)), "F7"),
    ClassificationRule("F8", (("v3", 1), ("v6", 1), ("s4", 0)), "F8"),
    ClassificationRule("F9", (("v1", 1), ("v2", 1), ("v5", -1)), "F9"),
)


@dataclass(frozen=True)
class ClassificationResult:
    """Predicted extremal families of one index, for both directions."""

    index: str
    max_family: str
    min_family: str
    fired_rules: tuple[tuple[str, str], ...]  # (direction, rule name)
    conflicts: tuple[str, ...]  # directions with more than one fired rule

    def to_json_dict(self) -> dict:
        return {
            "index": self.index,
            "max": self.max_family,
            "min": self.min_family,
            "fired_rules": [list(r) for r in self.fired_rules],
            "conflicts": list(self.conflicts),
        }


def _coeffs_close(f: IndexDefinition, g: IndexDefinition, eps: float) -> bool:
    return all(abs(a - b) < eps for a, b in zip(f.coeffs, g.coeffs))


def classify(f: IndexDefinition, eps: float = DEFAULT_EPS) -> ClassificationResult:
    """Predict the extremal family of f for maximization and minimization.

    The rule table runs on the V-profile of f (maximization) and of its
    complement (minimization).  If the coefficient vector matches the
    augmented Zagreb or Albertson built-ins (or their negations) within
    eps, the dedicated results replace the rule outcome.
    """
    azagreb = BUILTINS["aZagreb"]
    albertson = BUILTINS["Albertson"]
    for special, max_name, min_name in (
        (azagreb, SPECIAL_AZAGREB_MAX, SPECIAL_AZAGREB_MIN),
        (albertson, SPECIAL_ALBERTSON_MAX, SPECIAL_ALBERTSON_MIN),
    ):
        if _coeffs_close(f, special, eps):
            return ClassificationResult(f.name, max_name, min_name, (), ())
        if _coeffs_close(f, complement(special), eps):
            return ClassificationResult(f.name, min_name, max_name, (), ())

    fired: list[tuple[str, str]] = []
    conclusions: dict[str, list[str]] = {"max": [], "min": []}
    for direction, profile in (
        ("max", v_profile(f, eps)),
        ("min", v_profile(complement(f), eps)),
    ):
        for rule in RULES:
            if rule.fires(profile):
                fired.append((direction, rule.name))
                conclusions[direction].append(rule.conclusion)
    conflicts = tuple(d for d in ("max", "min") if len(conclusions[d]) > 1)

    def verdict(direction: str) -> str:
        hits = conclusions[direction]
        return hits[0] if hits else UNCLASSIFIED

    return ClassificationResult(
        f.name, verdict("max"), verdict("min"), tuple(fired), conflicts
    )


def predicted_censuses(
    result: ClassificationResult, direction: str, n: int, m: int
) -> frozenset[Census] | None:
    """Expand the predicted family descriptor to its census set at (n, m).

    Returns None when the index is unclassified in that direction; raises
    when more than one rule fired (no single prediction exists).
    """
    if direction not in ("max", "min"):
        raise ValueError(f"direction must be 'max' or 'min', got {direction!r}")
    if direction in result.conflicts:
        raise ValueError(
            f"{result.index}: conflicting rules fired for {direction}; no unique prediction"
        )
    descriptor = result.max_family if direction == "max" else result.min_family
    if descriptor == UNCLASSIFIED:
        return None
    if descriptor == SPECIAL_AZAGREB_MAX:
        exceptional = _AZAGREB_MAX_EXCEPTIONS.get((n, m))
        if exceptional is not None:
            return exceptional
        return family_censuses(FamilyId.F8, n, m).censuses
    if descriptor == SPECIAL_AZAGREB_MIN:
        return family_censuses(FamilyId.F10, n, m).censuses
    if descriptor == SPECIAL_ALBERTSON_MAX:
        return family_censuses(FamilyId.F11, n, m).censuses
    if descriptor == SPECIAL_ALBERTSON_MIN:
        return family_censuses(FamilyId.F12, n, m).censuses
    if descriptor == UNION_F1_F3:
        return (
            family_censuses(FamilyId.F1, n, m).censuses
            | family_censuses(FamilyId.F3, n, m).censuses
        )
    return family_censuses(FamilyId(descriptor), n, m).censuses


@dataclass(frozen=True)
class VerificationRow:
    """Outcome of one (n, m, direction) comparison against the oracle."""

    n: int
    m: int
    direction: str
    status: str  # "agree" | "disagree" | "skipped"
    predicted: tuple[Census, ...] | None
    observed: tuple[Census, ...]
    optimum: float


@dataclass(frozen=True)
class VerificationReport:
    """Machine check of one index's characterization over a range of orders."""

    index: str
    n_max: int
    rows: tuple[VerificationRow, ...]

    @property
    def agreements(self) -> int:
        return sum(r.status == "agree" for r in self.rows)

    @property
    def disagreements(self) -> int:
        return sum(r.status == "disagree" for r in self.rows)

    @property
    def skipped(self) -> int:
        return sum(r.status == "skipped" for r in self.rows)

    def ok(self) -> bool:
        return self.disagreements == 0

    def to_json_dict(self) -> dict:
        return {
            "index": self.index,
            "n_max": self.n_max,
            "agreements": self.agreements,
            "disagreements": self.disagreements,
            "skipped": self.skipped,
            "rows": [
                {
                    "n": r.n,
                    "m": r.m,
                    "direction": r.direction,
                    "status": r.status,
                    "predicted": None
                    if r.predicted is None
                    else [list(x) for x in r.predicted],
                    "observed": [list(x) for x in r.observed],
                    "optimum": r.optimum,
                }
                for r in self.rows
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    def to_text(self) -> str:
        lines = [
            f"index {self.index}: {self.agreements} agree, "
            f"{self.disagreements} disagree, {self.skipped} skipped (n <= {self.n_max})"
        ]
        width = max((len(str(r.predicted)) for r in self.rows), default=0)
        for r in self.rows:
            pred = "-" if r.predicted is None else ",".join(str(x) for x in r.predicted)
            obs = ",".join(str(x) for x in r.observed)
            lines.append(
                f"  n={r.n:<2} m={r.m:<2} {r.direction:<3} {r.status:<9} "
                f"predicted={pred:<{width}} observed={obs}"
            )
        return "\n".join(lines)


def verify_characterization(
    f: IndexDefinition,
    n_max: int,
    workers: int | None = None,
    eps: float = DEFAULT_EPS,
) -> VerificationReport:
    """Compare predicted and oracle extremal census sets for every (n, m)
    with 7 <= n <= n_max and both directions."""
    if n_max < 7:
        raise ValueError(f"n_max must be at least 7, got {n_max}")
    result = classify(f, eps)
    rows: list[VerificationRow] = []
    for n in range(7, n_max + 1):
        for m in chemical_size_range(n):
            for direction in ("max", "min"):
                report = extremal_censuses(f, n, m, direction, workers)
                observed = report.optimal_censuses
                predicted = predicted_censuses(result, direction, n, m)
                if predicted is None:
                    status = "skipped"
                    pred_tuple = None
                else:
                    pred_tuple = tuple(sorted(predicted))
                    status = "agree" if pred_tuple == observed else "disagree"
                rows.append(
                    VerificationRow(
                        n, m, direction, status, pred_tuple, observed, report.optimum
                    )
                )
    return VerificationReport(f.name, n_max, tuple(rows))


def verify_many(
    indices: Sequence[IndexDefinition],
    n_max: int,
    workers: int | None = None,
    eps: float = DEFAULT_EPS,
) -> list[VerificationReport]:
    """verify_characterization over a list of indices (oracle tables are shared)."""
    return [verify_characterization(f, n_max, workers, eps) for f in indices]
