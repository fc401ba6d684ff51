"""Degree-based topological indices as coefficient 5-vectors.

An index is a linear functional on edge censuses: five real coefficients
c12, c13, c22, c23, c33, one per unordered endpoint-degree pair.  The 33
classical indices are built in, each evaluated from its closed form at the
pairs (1,2), (1,3), (2,2), (2,3), (3,3); a few derived V-values of the
coefficients decide which extremal family the index belongs to (see
``chemgraph.classify``).
"""

from __future__ import annotations

import math
import unicodedata
from dataclasses import dataclass
from typing import Callable

from .census import Census

#: Endpoint-degree pairs indexing the five coefficients.
PAIRS = ((1, 2), (1, 3), (2, 2), (2, 3), (3, 3))

#: Default tolerance for classifying a V-value as zero.
DEFAULT_EPS = 1e-9


@dataclass(frozen=True)
class IndexDefinition:
    """A named degree-based index: value = sum of c_ij * x_ij."""

    name: str
    c12: float
    c13: float
    c22: float
    c23: float
    c33: float

    @property
    def coeffs(self) -> tuple[float, float, float, float, float]:
        return (self.c12, self.c13, self.c22, self.c23, self.c33)

    def coefficient(self, i: int, j: int) -> float:
        """Coefficient of the unordered pair {i, j}."""
        key = (min(i, j), max(i, j))
        try:
            return self.coeffs[PAIRS.index(key)]
        except ValueError:
            raise KeyError(f"no coefficient for degree pair {key}") from None

    def __post_init__(self):
        for c in self.coeffs:
            if not math.isfinite(c):
                raise ValueError(f"non-finite coefficient in {self.name}: {c}")


def evaluate(f: IndexDefinition, x: Census) -> float:
    """Value of the index on a census: the coefficient/census dot product."""
    x = Census(*x)
    return (
        f.c12 * x.x12 + f.c13 * x.x13 + f.c22 * x.x22 + f.c23 * x.x23 + f.c33 * x.x33
    )


def complement(f: IndexDefinition) -> IndexDefinition:
    """The index with every coefficient negated.

    Maximizing the complement is the same problem as minimizing the original
    index, which is how minimization is reduced to maximization throughout.
    """
    return IndexDefinition(f.name + "-bar", *(-c for c in f.coeffs))


_FORMULAS: dict[str, Callable[[int, int], float]] = {
    # Table order is the presentation order used by the CLI listing.
    "ABC": lambda i, j: math.sqrt((i + j - 2) / (i * j)),
    "ABSC": lambda i, j: math.sqrt((i + j - 2) / (i + j)),
    "Albertson": lambda i, j: abs(i - j),
    "AG": lambda i, j: (i + j) / (2 * math.sqrt(i * j)),
    "AG-GA": lambda i, j: (i + j) / (2 * math.sqrt(i * j)) - 2 * math.sqrt(i * j) / (i + j),
    "Extended": lambda i, j: (i / j + j / i) / 2,
    "Forgotten": lambda i, j: i * i + j * j,
    "GA": lambda i, j: 2 * math.sqrt(i * j) / (i + j),
    "Gourava1": lambda i, j: i + j + i * j,
    "Gourava2": lambda i, j: (i + j) * i * j,
    "hGourava1": lambda i, j: (i + j + i * j) ** 2,
    "hGourava2": lambda i, j: ((i + j) * i * j) ** 2,
    "GouravaSC": lambda i, j: 1 / math.sqrt(i + j + i * j),
    "GouravaPC": lambda i, j: math.sqrt(i * j * (i + j)),
    "Harmonic": lambda i, j: 2 / (i + j),
    "InvDeg": lambda i, j: i**-2 + j**-2,
    "InvSumDeg": lambda i, j: i * j / (i + j),
    "Randić": lambda i, j: 1 / math.sqrt(i * j),
    "rRandić": lambda i, j: math.sqrt(i * j),
    "Sigma": lambda i, j: (i - j) ** 2,
    "Sombor": lambda i, j: math.sqrt(i * i + j * j),
    "rSombor": lambda i, j: math.sqrt((i - 1) ** 2 + (j - 1) ** 2),
    "SumConn": lambda i, j: 1 / math.sqrt(i + j),
    "rSumConn": lambda i, j: math.sqrt(i + j),
    "Zagreb1": lambda i, j: i + j,
    "Zagreb2": lambda i, j: i * j,
    "aZagreb": lambda i, j: (i * j / (i + j - 2)) ** 3,
    "hZagreb1": lambda i, j: (i + j) ** 2,
    "hZagreb2": lambda i, j: (i * j) ** 2,
    "lnZagreb1": lambda i, j: math.log(i + j),
    "lnZagreb2": lambda i, j: 2 * (math.log(i) / i + math.log(j) / j),
    "lnZagreb3": lambda i, j: math.log(i) + math.log(j),
    "mZagreb": lambda i, j: i**-3 + j**-3,
}

BUILTINS: dict[str, IndexDefinition] = {
    name: IndexDefinition(name, *(fn(i, j) for i, j in PAIRS))
    for name, fn in _FORMULAS.items()
}

#: The reduced reciprocal Randić index: none of the classification rules
#: apply to it (its first four V-values are all negative), so it is the
#: canonical example of an index the classifier reports as unclassified.
#: It is not one of the 33 built-ins.
RR_RANDIC = IndexDefinition(
    "rrRandić", *(math.sqrt((i - 1) * (j - 1)) for i, j in PAIRS)
)

_EXTRAS = {RR_RANDIC.name: RR_RANDIC}


def _normalize(name: str) -> str:
    folded = unicodedata.normalize("NFKD", name)
    folded = "".join(ch for ch in folded if not unicodedata.combining(ch))
    return folded.casefold()


_BUILTIN_LOOKUP = {_normalize(name): f for name, f in BUILTINS.items()}
_EXTRA_LOOKUP = {_normalize(name): f for name, f in _EXTRAS.items()}


def builtin_names() -> tuple[str, ...]:
    """The 33 built-in short names, in table order."""
    return tuple(BUILTINS)


def builtin(name: str) -> IndexDefinition:
    """Look up one of the 33 built-ins, case-insensitively, accents optional."""
    f = _BUILTIN_LOOKUP.get(_normalize(name))
    if f is None:
        available = ", ".join(BUILTINS)
        raise KeyError(f"unknown index {name!r}; available: {available}")
    return f


def lookup(name: str) -> IndexDefinition:
    """Like builtin(), but also resolves the extra named index rrRandić."""
    key = _normalize(name)
    f = _BUILTIN_LOOKUP.get(key) or _EXTRA_LOOKUP.get(key)
    if f is None:
        available = ", ".join(list(BUILTINS) + list(_EXTRAS))
        raise KeyError(f"unknown index {name!r}; available: {available}")
    return f


def sign(value: float, eps: float = DEFAULT_EPS) -> int:
    """Classify a value as -1, 0 or +1; zero means |value| < eps."""
    if abs(value) < eps:
        return 0
    return 1 if value > 0 else -1


@dataclass(frozen=True)
class VProfile:
    """The eight V-values of an index plus the two derived combinations.

    V1..V4 control which edge kinds an index-maximizing graph can contain;
    V5..V8 are the gains of the count-preserving transforms used to push a
    maximizer into one of the extremal families.  s2 and s4 are the
    combinations V5+V7-2*V6 and V5+V7-4*V6 whose vanishing characterizes
    two further families.
    """

    v1: float
    v2: float
    v3: float
    v4: float
    v5: float
    v6: float
    v7: float
    v8: float
    eps: float = DEFAULT_EPS

    @property
    def s2(self) -> float:
        return self.v5 + self.v7 - 2 * self.v6

    @property
    def s4(self) -> float:
        return self.v5 + self.v7 - 4 * self.v6

    def value(self, key: str) -> float:
        if key in ("s2", "s4"):
            return getattr(self, key)
        if key in ("v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8"):
            return getattr(self, key)
        raise KeyError(f"unknown V-profile entry {key!r}")

    def sign_of(self, key: str) -> int:
        return sign(self.value(key), self.eps)

    def signs(self) -> dict[str, int]:
        keys = ("v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "s2", "s4")
        return {k: self.sign_of(k) for k in keys}


def v_profile(f: IndexDefinition, eps: float = DEFAULT_EPS) -> VProfile:
    """Compute V1..V8 from the coefficients of f.

    The min terms range over the coefficient of the unordered pair, e.g.
    c(3,1) is c13.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    c = f.coefficient
    v1 = (
        c(1, 3) - c(2, 2)
        + min(c(3, i) - c(2, i) for i in (1, 2, 3))
        + min(c(3, j) - c(2, j) for j in (2, 3))
    )
    v2 = c(1, 3) - c(1, 2) + min(c(2, i) - c(3, i) for i in (2, 3))
    v3 = (
        c(2, 2) - c(1, 3)
        + min(c(2, i) - c(3, i) for i in (1, 2, 3))
        + min(c(2, j) - c(3, j) for j in (2, 3))
    )
    v4 = 2 * c(2, 2) - c(1, 2) - c(2, 3) + 2 * min(c(2, i) - c(3, i) for i in (1, 2, 3))
    v5 = c(1, 3) - 4 * c(2, 3) + 3 * c(3, 3)
    v6 = c(2, 2) - 2 * c(2, 3) + c(3, 3)
    v7 = c(1, 2) - c(1, 3) - c(2, 3) + c(3, 3)
    v8 = -2 * c(1, 2) + 3 * c(1, 3) - 2 * c(2, 3) + c(3, 3)
    return VProfile(v1, v2, v3, v4, v5, v6, v7, v8, eps)


def index_to_json(f: IndexDefinition) -> dict:
    """Serialize as {"name": ..., "c": [c12, c13, c22, c23, c33]}."""
    return {"name": f.name, "c": list(f.coeffs)}


def index_from_json(data: dict) -> IndexDefinition:
    """Parse the JSON document form produced by index_to_json."""
    if not isinstance(data, dict) or set(data) != {"name", "c"}:
        raise ValueError('index JSON must be {"name": str, "c": [5 numbers]}')
    coeffs = data["c"]
    if not isinstance(coeffs, list) or len(coeffs) != 5:
        raise ValueError("index JSON field 'c' must hold exactly 5 numbers")
    return IndexDefinition(str(data["name"]), *(float(c) for c in coeffs))
