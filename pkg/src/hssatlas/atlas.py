"""Minimal-atlas classification, literature refinements, reports, scans.

The number S_B of Darboux charts needed to cover a space is classified
from two exact integers (the embedding degree and the complex dimension)
by the minimal-atlas theorem of Rudyak and Schlenk:

    clause (i):  degree >= 2n  =>  S_B = degree + 1          ("Thm1(i)")
    clause (ii): otherwise  max(n+1, degree+1) <= S_B <= 2n+1 ("Thm1(ii)")

A refinement table overlays sharper literature values onto clause (ii)
brackets; it can only narrow a bracket, never contradict it, and never
changes which clause fired.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from importlib import resources
from typing import Iterable

from .invariants import NormalizedVolume, degree, gamma, gromov_width_units, volume_units
from .spaces import InvalidParams, IrreducibleSpace, SpaceExpr, parse, type_i

CLAUSE_EXACT = "Thm1(i)"
CLAUSE_RANGE = "Thm1(ii)"

ENV_REFINEMENTS = "ATLAS_REFINEMENTS"

PROJECTIVE_RULE_PATTERN = "I(1,*)"
PROJECTIVE_RULE_TOKEN = "n_plus_1"


@dataclass(frozen=True)
class Refinement:
    """Literature narrowing of a classification bracket."""

    values: tuple[int, ...]
    citation: str

    @property
    def label(self) -> str:
        """Short head of the citation (text before the first ';')."""
        return self.citation.split(";")[0].strip()


@dataclass(frozen=True)
class SBResult:
    """Outcome of the classification: an exact chart count, or the
    clause (ii) bracket [max(n+1, degree+1), 2n+1], optionally narrowed
    by a refinement."""

    kind: str  # "Exact" | "Range"
    value: int | None = None
    lower: int | None = None
    upper: int | None = None
    refinement: Refinement | None = None

    @staticmethod
    def exact(value: int) -> "SBResult":
        return SBResult("Exact", value=value)

    @staticmethod
    def bracket(lower: int, upper: int, refinement: Refinement | None = None) -> "SBResult":
        return SBResult("Range", lower=lower, upper=upper, refinement=refinement)


@dataclass(frozen=True)
class RefinementEntry:
    pattern: str  # canonical key, or "I(1,*)" for the projective rule
    values: tuple[int, ...] | None  # explicit set; None for the rule
    rule: str | None  # "n_plus_1" or None
    citation: str


def _parse_values_spec(spec: str) -> tuple[tuple[int, ...] | None, str | None]:
    spec = spec.strip()
    if spec == PROJECTIVE_RULE_TOKEN:
        return None, PROJECTIVE_RULE_TOKEN
    if spec.startswith("{") and spec.endswith("}"):
        values = tuple(sorted(int(v) for v in spec[1:-1].split(",")))
        if not values:
            raise ValueError("empty value set")
        return values, None
    if spec.startswith("[") and spec.endswith("]"):
        lo_text, _, hi_text = spec[1:-1].partition(",")
        lo, hi = int(lo_text), int(hi_text)
        if hi < lo:
            raise ValueError(f"empty interval [{lo},{hi}]")
        return tuple(range(lo, hi + 1)), None
    raise ValueError(f"values must look like '{{5,6}}', '[7,10]' or '{PROJECTIVE_RULE_TOKEN}', got {spec!r}")


def _is_single_projective(space: SpaceExpr) -> bool:
    return len(space.factors) == 1 and space.factors[0].kind == "I" and space.factors[0].params[0] == 1


@dataclass(frozen=True)
class RefinementTable:
    entries: tuple[RefinementEntry, ...]

    @classmethod
    def from_lines(cls, lines: Iterable[str], source: str = "<memory>") -> "RefinementTable":
        """Parse '|'-separated records; '#' lines are comments.

        Explicit entries are validated at load time: the key must parse
        and the values must sit inside the bounds the theorem gives for
        that space.
        """
        entries: list[RefinementEntry] = []
        for lineno, raw in enumerate(lines, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = [p.strip() for p in line.split("|")]
            if len(parts) != 3:
                raise ValueError(f"{source}:{lineno}: expected 'key | values | citation'")
            pattern, values_spec, citation = parts
            if not citation:
                raise ValueError(f"{source}:{lineno}: a citation is mandatory")
            try:
                values, rule = _parse_values_spec(values_spec)
            except ValueError as exc:
                raise ValueError(f"{source}:{lineno}: {exc}") from None
            if rule is not None:
                if pattern != PROJECTIVE_RULE_PATTERN:
                    raise ValueError(
                        f"{source}:{lineno}: the {PROJECTIVE_RULE_TOKEN} rule requires "
                        f"pattern {PROJECTIVE_RULE_PATTERN}"
                    )
                entries.append(RefinementEntry(pattern, None, rule, citation))
                continue
            space = parse(pattern)
            assert values is not None
            bare = classify(space)
            allowed = {bare.value} if bare.kind == "Exact" else set(range(bare.lower, bare.upper + 1))
            if not set(values) <= allowed:
                raise ValueError(
                    f"{source}:{lineno}: refinement {set(values)} for {space.render()} "
                    f"contradicts the theorem bounds {sorted(allowed)[0]}..{sorted(allowed)[-1]}"
                )
            entries.append(RefinementEntry(space.render(), values, None, citation))
        return cls(tuple(entries))

    @classmethod
    def load(cls, path: str) -> "RefinementTable":
        with open(path, encoding="utf-8") as handle:
            return cls.from_lines(handle, source=str(path))

    @classmethod
    def builtin(cls) -> "RefinementTable":
        text = resources.files("hssatlas").joinpath("data/refinements.txt").read_text("utf-8")
        return cls.from_lines(text.splitlines(), source="<builtin>")

    @classmethod
    def resolve(cls, path: str | None = None) -> "RefinementTable":
        """Explicit path beats the ATLAS_REFINEMENTS variable beats the
        built-in table."""
        if path is None:
            path = os.environ.get(ENV_REFINEMENTS) or None
        return cls.load(path) if path else cls.builtin()

    def lookup(self, space: SpaceExpr) -> Refinement | None:
        space = space.canonicalize()
        key = space.render()
        for entry in self.entries:
            if entry.rule is None and entry.pattern == key:
                return Refinement(entry.values, entry.citation)
        for entry in self.entries:
            if entry.rule == PROJECTIVE_RULE_TOKEN and _is_single_projective(space):
                return Refinement((space.dimension + 1,), entry.citation)
        return None


def classify(space: SpaceExpr, table: RefinementTable | None = None) -> SBResult:
    """Exact chart count when degree >= 2n, otherwise the theorem
    bracket, narrowed by the refinement table when one is supplied."""
    space = space.canonicalize()
    d = degree(space)
    n = space.dimension
    if d >= 2 * n:
        return SBResult.exact(d + 1)
    refinement = table.lookup(space) if table is not None else None
    return SBResult.bracket(max(n + 1, d + 1), 2 * n + 1, refinement)


@dataclass(frozen=True)
class Report:
    space: str
    n: int
    rank: int
    degree: int
    gamma: int
    volume: NormalizedVolume
    gromov_width_units: int
    sb: SBResult
    case: str
    warnings: tuple[str, ...]
    citations: tuple[str, ...]

    @property
    def two_n(self) -> int:
        return 2 * self.n


_DEGREE_CITATIONS = {
    "I": "degree(I(k,s)): volume of the type I classical domain (Hua); "
    "equals the standard-Young-tableaux count of the k x (s-k) rectangle",
    "II": "degree(II(s)): volume of the type II classical domain (Hua)",
    "III": "degree(III(s)): volume of the type III classical domain (Hua)",
    "IV": "degree(IV(s)) = 2: quadric embedding (Wirtinger degree-volume identity)",
}
_PRODUCT_CITATION = (
    "degree(product) = multinomial(n_1,...,n_m) * prod(factor degrees): "
    "volumes multiply and Vol = degree * pi^n/n!"
)
_GAMMA_CITATION = (
    "Gamma = degree + 1: Vol = degree * pi^n/n! (Wirtinger/Barros-Ros) and "
    "Gromov width pi for every compact Hermitian symmetric space"
)
_CLAUSE_CITATIONS = {
    CLAUSE_EXACT: "S_B = degree + 1 when degree >= 2n: Rudyak-Schlenk minimal-atlas theorem, clause (i)",
    CLAUSE_RANGE: "max(n+1, degree+1) <= S_B <= 2n+1 when degree < 2n: "
    "Rudyak-Schlenk minimal-atlas theorem, clause (ii)",
}

# The type II form below s=6 and the type III form below s=5 are outside
# the range the classification uses them in; III(2) in particular
# disagrees with the III(2) ~ IV(3) isomorphism (degree 1 vs 2).
_SMALL_PARAM_LIMIT = {"II": 5, "III": 4}


def _warnings_for(space: SpaceExpr) -> tuple[str, ...]:
    notes: list[str] = []
    for f in space.factors:
        limit = _SMALL_PARAM_LIMIT.get(f.kind)
        if limit is None or f.params[0] > limit:
            continue
        if f.kind == "III" and f.params[0] == 2:
            notes.append(
                "III(2): small-parameter degree formula; conflicts with the "
                "III_2 vs IV_3 isomorphism diagnostic (run `check`)"
            )
        else:
            notes.append(
                f"{f.render()}: small-parameter degree formula; "
                "see the isomorphism diagnostics (run `check`)"
            )
    return tuple(dict.fromkeys(notes))


def report(space: SpaceExpr, table: RefinementTable | None = None) -> Report:
    """Full invariant report for one (product) space."""
    space = space.canonicalize()
    sb = classify(space, table)
    case = CLAUSE_EXACT if sb.kind == "Exact" else CLAUSE_RANGE
    citations = [
        _DEGREE_CITATIONS[kind]
        for kind in ("I", "II", "III", "IV")
        if any(f.kind == kind for f in space.factors)
    ]
    if len(space.factors) > 1:
        citations.append(_PRODUCT_CITATION)
    citations.append(_GAMMA_CITATION)
    citations.append(_CLAUSE_CITATIONS[case])
    return Report(
        space=space.render(),
        n=space.dimension,
        rank=space.rank,
        degree=degree(space),
        gamma=gamma(space),
        volume=volume_units(space),
        gromov_width_units=gromov_width_units(space),
        sb=sb,
        case=case,
        warnings=_warnings_for(space),
        citations=tuple(citations),
    )


@dataclass(frozen=True)
class ScanRow:
    param: int
    n: int
    degree: int
    sb: SBResult
    clause: str


@dataclass(frozen=True)
class ScanResult:
    family: str
    rows: tuple[ScanRow, ...]
    first_exact: int | None
    footnotes: tuple[str, ...]


_TYPE_III_FOOTNOTE = (
    "type III threshold: published statements disagree (s >= 5 vs s >= 6); "
    "the exact degrees give the first clause-(i) case at s = 5, since "
    "degree(III(4)) = 12 < 2n = 20 while degree(III(5)) = 286 >= 2n = 30"
)

_FAMILIES = ("I", "II", "III", "IV")


def threshold_scan(
    family: str,
    start: int,
    stop: int,
    k: int | None = None,
    table: RefinementTable | None = None,
) -> ScanResult:
    """Classify one family over an inclusive parameter range.

    ``first_exact`` is the least parameter from which the exact clause
    fires and keeps firing through the end of the range (None if the
    final row is still a bracket).
    """
    if family not in _FAMILIES:
        raise InvalidParams(f"unknown family {family!r} (expected one of {', '.join(_FAMILIES)})")
    if family == "I":
        if k is None:
            raise InvalidParams("family I needs a fixed k (write the family as 'I:k=2')")
        label = f"I(k={k})"
    else:
        if k is not None:
            raise InvalidParams("only family I takes a k parameter")
        label = family
    if start > stop:
        raise InvalidParams(f"empty range {start}..{stop}")

    rows = []
    for s in range(start, stop + 1):
        atom = type_i(k, s) if family == "I" else IrreducibleSpace(family, (s,))
        space = SpaceExpr((atom,)).canonicalize()
        sb = classify(space, table)
        rows.append(
            ScanRow(
                param=s,
                n=space.dimension,
                degree=degree(space),
                sb=sb,
                clause=CLAUSE_EXACT if sb.kind == "Exact" else CLAUSE_RANGE,
            )
        )

    first_exact = None
    for row in reversed(rows):
        if row.clause != CLAUSE_EXACT:
            break
        first_exact = row.param

    footnotes = []
    if first_exact is None:
        footnotes.append(f"the exact clause {CLAUSE_EXACT} never fires in the scanned range")
    else:
        footnotes.append(
            f"first exact classification ({CLAUSE_EXACT}) at parameter {first_exact}; "
            f"it keeps firing through {stop}"
        )
    if family == "III":
        footnotes.append(_TYPE_III_FOOTNOTE)
    return ScanResult(family=label, rows=tuple(rows), first_exact=first_exact, footnotes=tuple(footnotes))
