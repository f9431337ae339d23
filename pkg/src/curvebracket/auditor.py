"""Audits of maps between surfaces against bracket and intersection data.

A homomorphism between the free fundamental groups of two surface
symbols is audited over a bounded sample of class pairs: if it came from
an orientation-preserving homeomorphism every bracket must be carried
to the image bracket; an orientation-reversing one flips every sign;
anything else leaves a certificate.  A preserving verdict only means
"no violation up to the stated bound and sample".
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from .goldman import BracketElement, bracket_classes, is_simple
from .linking import _linked_cells
from .surface import (
    ParseError,
    SurfaceSymbol,
    is_excluded_surface,
    is_peripheral,
    parse_surface,
)
from .words import (
    CyclicClass,
    PreconditionError,
    TrivialClassError,
    canonical_cyclic,
    enumerate_cyclic_classes,
    format_word,
    parse_word,
    primitive_root,
    reduce,
)

PRESERVING = "preserving"
ANTI_PRESERVING = "anti_preserving"
VIOLATING = "violating"


class ExcludedSurfaceError(PreconditionError):
    """The target surface is excluded: the plane or the cylinder."""


@dataclass(frozen=True)
class SurfaceMap:
    """Generator images defining a homomorphism between symbol groups.

    ``expect_equivalence`` records the user's claim that the map is a
    homotopy equivalence; it is advisory and never verified.
    """

    source: SurfaceSymbol
    target: SurfaceSymbol
    images: tuple[tuple[int, ...], ...]
    expect_equivalence: bool = False

    def __post_init__(self):
        if len(self.images) != self.source.rank:
            raise ValueError("need one image word per source generator")
        for w in self.images:
            if any(abs(l) > self.target.rank for l in w):
                raise ValueError("image word uses letters beyond the target rank")


def apply_map_word(m: SurfaceMap, word: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for l in word:
        image = m.images[abs(l) - 1]
        out.extend(image if l > 0 else tuple(-x for x in reversed(image)))
    return reduce(out)


def apply_map(m: SurfaceMap, x: CyclicClass) -> CyclicClass:
    """Image class under the induced map on free homotopy classes."""
    return canonical_cyclic(apply_map_word(m, x.letters))


def apply_map_element(m: SurfaceMap, elem: BracketElement) -> BracketElement:
    out: dict[CyclicClass, int] = {}
    for cls, coeff in elem.terms():
        image = apply_map(m, cls)
        out[image] = out.get(image, 0) + coeff
    return BracketElement(out)


@dataclass(frozen=True)
class Certificate:
    """A class pair with both sides' computed values, re-verifiable."""

    x: CyclicClass
    y: CyclicClass
    pushed: object  # value computed in the source and mapped over
    direct: object  # value computed directly in the target


@dataclass(frozen=True)
class AuditReport:
    verdict: str
    certificates: tuple[Certificate, ...]
    length_bound: int
    sample_description: str
    pairs_checked: int
    pairs_skipped: int = 0

    def __post_init__(self):
        if self.verdict == VIOLATING and not self.certificates:
            raise ValueError("a violating verdict requires a certificate")


@dataclass(frozen=True)
class FillReport:
    passed: bool
    counterexample: Optional[CyclicClass]
    classes_checked: int


def enumerate_classes(
    s: SurfaceSymbol, length_bound: int, which: str = "all"
) -> list[CyclicClass]:
    """Non-trivial canonical classes up to the length bound, one per
    conjugacy class, in deterministic lexicographic order."""
    if length_bound < 1:
        raise ValueError("length bound must be at least 1")
    classes = enumerate_cyclic_classes(s.rank, length_bound)
    if which == "all":
        return classes
    if which == "nonperipheral":
        return [x for x in classes if not is_peripheral(s, x)]
    if which == "simple":
        return [x for x in classes if is_simple(s, x)]
    raise ValueError(f"unknown filter {which!r}")


def _sample_pairs(
    classes: list[CyclicClass], sample: Optional[tuple[int, int]]
) -> tuple[list[tuple[CyclicClass, CyclicClass]], str]:
    pairs = [(x, y) for i, x in enumerate(classes) for y in classes[i:]]
    if sample is None:
        return pairs, f"exhaustive over {len(classes)} classes"
    count, seed = sample
    if count >= len(pairs):
        return pairs, f"exhaustive over {len(classes)} classes (sample >= population)"
    rng = random.Random(seed)
    picked = sorted(rng.sample(range(len(pairs)), count))
    return [pairs[k] for k in picked], f"random {count} pairs, seed {seed}"


def _require_target(m: SurfaceMap) -> None:
    if is_excluded_surface(m.target):
        raise ExcludedSurfaceError(
            "the target surface is excluded: not allowed to be "
            "the plane or the cylinder"
        )


def audit_bracket(
    m: SurfaceMap, length_bound: int, sample: Optional[tuple[int, int]] = None
) -> AuditReport:
    """Compare mapped brackets with brackets of mapped classes over the
    chosen sample of source class pairs."""
    _require_target(m)
    classes = enumerate_classes(m.source, length_bound)
    pairs, description = _sample_pairs(classes, sample)
    eq_failures: list[Certificate] = []
    neg_failures: list[Certificate] = []
    hard: list[Certificate] = []
    any_nonzero = False
    for x, y in pairs:
        pushed = apply_map_element(m, bracket_classes(m.source, x, y))
        direct = bracket_classes(m.target, apply_map(m, x), apply_map(m, y))
        if not (pushed.is_zero and direct.is_zero):
            any_nonzero = True
        cert = Certificate(x, y, pushed, direct)
        eq = direct == pushed
        neg = direct == -pushed
        if not eq:
            eq_failures.append(cert)
        if not neg:
            neg_failures.append(cert)
        if not eq and not neg:
            hard.append(cert)
    if not eq_failures:
        verdict, certs = PRESERVING, ()
    elif not neg_failures and any_nonzero:
        verdict, certs = ANTI_PRESERVING, ()
    else:
        witnesses = hard if hard else (eq_failures[:1] + neg_failures[:1])
        verdict, certs = VIOLATING, tuple(witnesses[:10])
    return AuditReport(verdict, certs, length_bound, description, len(pairs))


def _usable(s: SurfaceSymbol, x: CyclicClass, y: CyclicClass) -> bool:
    if x.is_trivial or y.is_trivial:
        return False
    root_x, mult_x = primitive_root(x)
    root_y, mult_y = primitive_root(y)
    return mult_x == 1 and mult_y == 1 and root_x != root_y


def audit_intersection(
    m: SurfaceMap,
    length_bound: int,
    mode: str = "zero_pattern",
    sample: Optional[tuple[int, int]] = None,
) -> AuditReport:
    """Compare intersection numbers across the map.

    Pairs are restricted to the regime where the count is guaranteed
    (both classes primitive with distinct roots, on both sides); skipped
    pairs are tallied in the report.
    """
    if mode not in ("zero_pattern", "exact"):
        raise ValueError("mode must be 'zero_pattern' or 'exact'")
    _require_target(m)
    classes = enumerate_classes(m.source, length_bound)
    pairs, description = _sample_pairs(classes, sample)
    description += f", mode {mode}, guaranteed regime only"
    certificates: list[Certificate] = []
    checked = skipped = 0
    for x, y in pairs:
        fx, fy = apply_map(m, x), apply_map(m, y)
        if not (_usable(m.source, x, y) and _usable(m.target, fx, fy)):
            skipped += 1
            continue
        checked += 1
        source_count = len(_linked_cells(m.source, x.letters, y.letters))
        target_count = len(_linked_cells(m.target, fx.letters, fy.letters))
        if mode == "zero_pattern":
            ok = (source_count == 0) == (target_count == 0)
        else:
            ok = source_count == target_count
        if not ok and len(certificates) < 10:
            certificates.append(Certificate(x, y, source_count, target_count))
    verdict = PRESERVING if not certificates else VIOLATING
    return AuditReport(
        verdict, tuple(certificates), length_bound, description, checked, skipped
    )


def fill_check(
    s: SurfaceSymbol, system: Sequence[CyclicClass], length_bound: int
) -> FillReport:
    """Whether every non-peripheral class up to the bound is forced to
    cross some member of the system."""
    for member in system:
        if member.is_trivial:
            raise TrivialClassError("filling systems cannot contain the trivial class")
    checked = 0
    for y in enumerate_classes(s, length_bound, "nonperipheral"):
        checked += 1
        if all(not _linked_cells(s, y.letters, member.letters) for member in system):
            return FillReport(False, y, checked)
    return FillReport(True, None, checked)


def parse_map_file(text: str, base_dir: Path) -> SurfaceMap:
    """Parse the map format::

        source torus.srf
        target pants.srf
        map a -> ab
        map b -> b

    Surface paths are resolved relative to the map file's directory.
    """
    source: Optional[SurfaceSymbol] = None
    target: Optional[SurfaceSymbol] = None
    images: dict[int, tuple[int, ...]] = {}
    expect = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        fields = line.split()
        keyword = fields[0]
        col = line.index(keyword) + 1
        if keyword in ("source", "target"):
            if len(fields) != 2:
                raise ParseError(f"expected '{keyword} <surface-file>'", lineno, col)
            path = base_dir / fields[1]
            try:
                symbol = parse_surface(path.read_text())
            except OSError as exc:
                raise ParseError(f"cannot read {path}: {exc}", lineno, col) from exc
            if keyword == "source":
                source = symbol
            else:
                target = symbol
        elif keyword == "map":
            if len(fields) != 4 or fields[2] != "->":
                raise ParseError("expected 'map <generator> -> <word>'", lineno, col)
            if source is None:
                raise ParseError("'map' before 'source'", lineno, col)
            try:
                (gen,) = parse_word(fields[1], rank=source.rank)
            except ValueError as exc:
                raise ParseError(str(exc), lineno, line.index(fields[1], col) + 1) from exc
            if gen < 0:
                raise ParseError("map lines name generators, not inverses", lineno, col)
            rank = target.rank if target is not None else None
            try:
                images[gen] = parse_word(fields[3], rank=rank)
            except ValueError as exc:
                raise ParseError(str(exc), lineno, line.index(fields[3], col) + 1) from exc
        elif keyword == "expect_equivalence":
            expect = True
        else:
            raise ParseError(f"unknown keyword {keyword!r}", lineno, col)
    if source is None or target is None:
        raise ParseError("map file must define 'source' and 'target'", 1, 1)
    missing = [g for g in range(1, source.rank + 1) if g not in images]
    if missing:
        raise ParseError(
            f"missing images for generators: {', '.join(format_word((g,)) for g in missing)}",
            1,
            1,
        )
    return SurfaceMap(
        source, target, tuple(images[g] for g in range(1, source.rank + 1)), expect
    )


__all__ = [
    "ANTI_PRESERVING",
    "AuditReport",
    "Certificate",
    "ExcludedSurfaceError",
    "FillReport",
    "PRESERVING",
    "SurfaceMap",
    "VIOLATING",
    "apply_map",
    "apply_map_element",
    "audit_bracket",
    "audit_intersection",
    "enumerate_classes",
    "fill_check",
    "parse_map_file",
]
