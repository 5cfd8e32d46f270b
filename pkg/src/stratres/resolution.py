"""Rule checkers for existence and classification of resolutions of
stratified spaces with isolated singularities.

Existence is decided per link from bordism data: an asserted bordism class,
or Stiefel-Whitney numbers (a closed manifold bounds exactly when all its
characteristic numbers vanish), with a deliberate third verdict
``undecidable`` when neither is available.  Optimality uses the decidable
special rules: dimension four reduces to orientability of the links, and
parallelizable links bounding parallelizable manifolds always admit an
optimal resolution; the general lift-bordism condition is consumed as a
user-supplied verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Sequence, Tuple

from .decider import decide_elementary
from .errors import DimensionMismatchError, InputError
from .intlinalg import signature
from .triples import IntersectionTriple, glue_along_homology_sphere

YES = "yes"
NO = "no"
UNDECIDABLE = "undecidable-with-given-data"

ALGEBRAIC_SET_REMARK = (
    "for a compact space this verdict also settles whether it is "
    "homeomorphic to a real algebraic set with isolated singularities "
    "(the two properties are equivalent)"
)


def partitions(n: int) -> Tuple[Tuple[int, ...], ...]:
    """All partitions of n as descending tuples, largest part first."""
    if n == 0:
        return ((),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(n, n, [])
    return tuple(sorted(out, reverse=True))


def partition_key(parts) -> str:
    return ",".join(str(p) for p in parts)


@dataclass(frozen=True)
class LinkDescriptor:
    """Bordism-relevant data of one singularity link.

    ``sw_numbers`` maps partition keys (e.g. ``"2,2"`` for the square of
    the second class) to bits and must cover exactly the monomials of total
    degree ``dim``.  ``known_bordism_trivial`` and ``lift_bordism_trivial``
    are direct assertions that short-circuit the rules.
    """

    dim: int
    orientable: bool
    parallelizable: bool = False
    bounds_parallelizable: Optional[bool] = None
    sw_numbers: Optional[Dict[str, int]] = None
    known_bordism_trivial: Optional[bool] = None
    lift_bordism_trivial: Optional[bool] = None
    name: str = ""

    def __post_init__(self):
        if self.parallelizable and not self.orientable:
            raise InputError("a parallelizable link is orientable")
        if self.sw_numbers is not None:
            want = {partition_key(p) for p in partitions(self.dim)}
            got = set(self.sw_numbers)
            if got != want:
                missing = sorted(want - got)
                extra = sorted(got - want)
                raise InputError(
                    f"sw_numbers must index the degree-{self.dim} monomials; "
                    f"missing {missing}, unexpected {extra}"
                )
            for k, v in self.sw_numbers.items():
                if v not in (0, 1):
                    raise InputError(f"sw number {k!r} must be a bit, got {v!r}")


@dataclass(frozen=True)
class LinkFinding:
    link: str
    rule: str
    verdict: str
    detail: str = ""


@dataclass(frozen=True)
class ResolutionVerdict:
    exists: str  # yes / no / undecidable-with-given-data
    rule: str
    per_link: Tuple[LinkFinding, ...] = ()
    remark: str = ""

    def to_dict(self):
        out = {
            "exists": self.exists,
            "rule": self.rule,
            "per_link": [
                {"link": f.link, "rule": f.rule, "verdict": f.verdict,
                 "detail": f.detail}
                for f in self.per_link
            ],
        }
        if self.remark:
            out["remark"] = self.remark
        return out


def _link_name(link, i):
    return link.name or f"link[{i}]"


def check_resolution_exists(links: Sequence[LinkDescriptor], n: int) -> ResolutionVerdict:
    """A resolution exists iff every link bounds.

    Per link, the first applicable rule decides: a direct bordism
    assertion; otherwise vanishing of all Stiefel-Whitney numbers (their
    vanishing characterizes bounding); otherwise the link is undecidable
    with the given data.
    """
    findings = []
    for i, link in enumerate(links):
        if link.dim != n - 1:
            raise DimensionMismatchError(
                f"link {_link_name(link, i)} has dim {link.dim}, expected {n - 1}"
            )
        if link.known_bordism_trivial is not None:
            verdict = YES if link.known_bordism_trivial else NO
            findings.append(LinkFinding(_link_name(link, i), "asserted-bordism-class",
                                        verdict))
        elif link.sw_numbers is not None:
            nonzero = sorted(k for k, v in link.sw_numbers.items() if v)
            if nonzero:
                findings.append(LinkFinding(
                    _link_name(link, i), "sw-number-nonzero", NO,
                    f"nonzero monomials: {', '.join(nonzero)}"))
            else:
                findings.append(LinkFinding(
                    _link_name(link, i), "sw-numbers-vanish", YES))
        else:
            findings.append(LinkFinding(
                _link_name(link, i), "no-bordism-data", UNDECIDABLE))
    if any(f.verdict == NO for f in findings):
        overall = NO
    elif all(f.verdict == YES for f in findings):
        overall = YES
    else:
        overall = UNDECIDABLE
    remark = ALGEBRAIC_SET_REMARK if overall in (YES, NO) else ""
    return ResolutionVerdict(overall, "links-bound", tuple(findings), remark)


def check_optimal_resolution(links: Sequence[LinkDescriptor], n: int) -> ResolutionVerdict:
    """Optimal-resolution rule cascade.

    In ambient dimension four the answer is exactly orientability of every
    link.  Otherwise a parallelizable link bounding a parallelizable
    manifold passes, a user-supplied lift-bordism verdict is consumed
    as-is, and anything else is undecidable with the given data.
    """
    findings = []
    for i, link in enumerate(links):
        if link.dim != n - 1:
            raise DimensionMismatchError(
                f"link {_link_name(link, i)} has dim {link.dim}, expected {n - 1}"
            )
        name = _link_name(link, i)
        if n == 4:
            findings.append(LinkFinding(
                name, "dimension-4-orientability",
                YES if link.orientable else NO,
                "orientable 3-manifolds are parallelizable and spin-bound"))
        elif link.parallelizable and link.bounds_parallelizable:
            findings.append(LinkFinding(name, "parallelizable-boundary", YES))
        elif link.lift_bordism_trivial is not None:
            findings.append(LinkFinding(
                name, "asserted-lift-bordism",
                YES if link.lift_bordism_trivial else NO))
        else:
            findings.append(LinkFinding(name, "no-lift-data", UNDECIDABLE))
    if any(f.verdict == NO for f in findings):
        overall = NO
    elif all(f.verdict == YES for f in findings):
        overall = YES
    else:
        overall = UNDECIDABLE
    return ResolutionVerdict(overall, "optimal-links-lift-bound", tuple(findings))


def check_s1_quotient(dim_m: int, semi_free: bool, isolated_fixed_points: bool) -> ResolutionVerdict:
    """Oriented resolution of the quotient of a semi-free circle action
    with isolated fixed points: exists iff the dimension is divisible by 4.

    Odd dimensions cannot carry isolated fixed points of such an action, so
    odd input yields an undecidable verdict with that note.
    """
    if not (semi_free and isolated_fixed_points):
        raise InputError(
            "the quotient rule applies to semi-free actions with isolated "
            "fixed points only"
        )
    if dim_m % 2 == 1:
        return ResolutionVerdict(
            UNDECIDABLE, "circle-quotient",
            (LinkFinding("fixed-points", "odd-dimension", UNDECIDABLE,
                         "an odd-dimensional manifold admits no isolated "
                         "fixed points of a semi-free circle action"),))
    if dim_m % 4 == 0:
        detail = ("each link is an odd complex projective space, the sphere "
                  "bundle of a disk bundle over quaternionic projective "
                  "space, hence bounds")
        return ResolutionVerdict(
            YES, "circle-quotient",
            (LinkFinding("fixed-points", "dimension-0-mod-4", YES, detail),))
    detail = ("each link is an even complex projective space of signature 1, "
              "which bounds no oriented manifold")
    return ResolutionVerdict(
        NO, "circle-quotient",
        (LinkFinding("fixed-points", "dimension-2-mod-4", NO, detail),))


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class NeighborhoodDescriptor:
    """Closed-up neighborhood of one resolved singularity: its intersection
    triple, Euler number, subgroup index, and an opaque token naming the
    induced boundary structure for compatibility checks."""

    triple: IntersectionTriple
    euler: int
    index: int
    boundary_structure_id: str
    spin: Optional[bool] = None

    def __post_init__(self):
        if self.euler != self.triple.euler:
            raise InputError(
                f"descriptor euler {self.euler} != triple euler {self.triple.euler}"
            )


@dataclass(frozen=True)
class ResolutionPair:
    left: NeighborhoodDescriptor
    right: NeighborhoodDescriptor
    glued_triple: Optional[IntersectionTriple] = None

    def glued(self) -> IntersectionTriple:
        if self.glued_triple is not None:
            return self.glued_triple
        return glue_along_homology_sphere(self.left.triple, self.right.triple)


ALMOST_EQUIVALENT = "almost-equivalent"
STABLY_ALMOST_EQUIVALENT = "stably-almost-equivalent"
TOPOLOGICALLY_EQUIVALENT_STABLY = "topologically-equivalent-stably"
CONDITIONS_FAILED = "conditions-failed"


@dataclass(frozen=True)
class ClassificationReport:
    verdict: str
    failed_conditions: Tuple[str, ...]
    per_singularity: Tuple[dict, ...]
    stabilization: str = ""

    def to_dict(self):
        return {
            "verdict": self.verdict,
            "failed_conditions": list(self.failed_conditions),
            "per_singularity": [dict(d) for d in self.per_singularity],
            "stabilization": self.stabilization,
        }


def classify_resolutions(pairs: Sequence[ResolutionPair], n: int) -> ClassificationReport:
    """Check the four equivalence conditions for each singularity pair:
    equal Euler numbers, equal index, matching boundary structure, and an
    elementary glued triple.

    All conditions passing gives almost-equivalence for odd n and
    stable almost-equivalence (up to one product of middle spheres) for
    even n; otherwise the report names every failed condition.
    """
    if n <= 2:
        raise InputError("the general classification needs middle dimension > 2")
    failed = []
    details = []
    for i, pair in enumerate(pairs):
        d = {"pair": i}
        d["euler"] = pair.left.euler == pair.right.euler
        if not d["euler"]:
            d["euler_values"] = [pair.left.euler, pair.right.euler]
        d["index"] = pair.left.index == pair.right.index
        if not d["index"]:
            d["index_values"] = [pair.left.index, pair.right.index]
        d["boundary"] = (pair.left.boundary_structure_id
                         == pair.right.boundary_structure_id)
        glued = pair.glued()
        verdict = decide_elementary(glued)
        d["elementary"] = verdict.elementary
        if not verdict.elementary:
            name, value = verdict.obstruction
            d["obstruction"] = {"name": name, "value": value}
        for cond in ("euler", "index", "boundary", "elementary"):
            if not d[cond] and cond not in failed:
                failed.append(cond)
        details.append(d)
    if failed:
        return ClassificationReport(CONDITIONS_FAILED, tuple(failed), tuple(details))
    if n % 2 == 1:
        return ClassificationReport(ALMOST_EQUIVALENT, (), tuple(details), "k = 0")
    return ClassificationReport(STABLY_ALMOST_EQUIVALENT, (), tuple(details),
                                "k in {0, 1}")


def classify_resolutions_dim4(pairs: Sequence[ResolutionPair]) -> ClassificationReport:
    """Dimension-four classification: both sides spin, equal Euler numbers,
    spin structures matching on the boundary, and vanishing signature of the
    glued piece; passing gives topological equivalence after at most one
    stabilization."""
    failed = []
    details = []
    for i, pair in enumerate(pairs):
        for side in (pair.left, pair.right):
            if side.spin is not True:
                raise InputError(
                    "the dimension-4 classification applies to spin "
                    "resolutions only"
                )
        d = {"pair": i}
        d["euler"] = pair.left.euler == pair.right.euler
        if not d["euler"]:
            d["euler_values"] = [pair.left.euler, pair.right.euler]
        d["boundary"] = (pair.left.boundary_structure_id
                         == pair.right.boundary_structure_id)
        glued = pair.glued()
        sig = signature(glued.form)
        d["signature"] = sig.index == 0
        if not d["signature"]:
            d["signature_value"] = sig.index
        for cond in ("euler", "boundary", "signature"):
            if not d[cond] and cond not in failed:
                failed.append(cond)
        details.append(d)
    if failed:
        return ClassificationReport(CONDITIONS_FAILED, tuple(failed), tuple(details))
    return ClassificationReport(TOPOLOGICALLY_EQUIVALENT_STABLY, (), tuple(details),
                                "k in {0, 1}")
