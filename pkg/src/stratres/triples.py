"""Intersection triples: middle-dimensional homology with its pairing and
normal-bundle data.

A triple holds the middle dimension ``n``, a ``(-1)^n``-symmetric integer
form on a free module, and a quadratic datum ``nu`` assigning a coefficient
group element to each basis vector.  ``nu`` extends to arbitrary vectors by
the non-linearity law

    nu(x + y) = nu(x) + nu(y) + d Lambda(x, y)

where ``d`` is multiplication by the boundary element; when the data is
stable the boundary element is zero and ``nu`` is a homomorphism.
"""

from __future__ import annotations

from math import gcd
from typing import NamedTuple, Optional, Sequence

from .errors import (
    DimensionMismatchError,
    IndexUndefinedError,
    InputError,
    InsufficientInputError,
    MismatchedTriplesError,
    UnsupportedGluingError,
)
from .groups import BY_KIND, INTEGERS, ORDER_TWO, TRIVIAL, CoefficientGroup
from .intlinalg import BilinearForm

HOMOLOGY_SPHERE = "homology-sphere"

# Bott periodicity: pi_n(BO) by n mod 8, for n >= 1.  The stable group
# pi_{n-1}(SO) coincides with pi_n(BO) for n >= 2.
_PI_BO_MOD8 = {
    1: ORDER_TWO,
    2: ORDER_TWO,
    3: TRIVIAL,
    4: INTEGERS,
    5: TRIVIAL,
    6: TRIVIAL,
    7: TRIVIAL,
    0: INTEGERS,
}


def pi_bo(n: int) -> CoefficientGroup:
    """pi_n(BO) from the Bott table (n >= 1)."""
    if n < 1:
        raise InputError(f"pi_n(BO) table needs n >= 1, got {n}")
    return _PI_BO_MOD8[n % 8]


def stable_so(n: int) -> CoefficientGroup:
    """Stable pi_{n-1}(SO), which equals pi_n(BO) for n >= 2."""
    if n < 2:
        raise InputError(f"stable pi_(n-1)(SO) lookup needs n >= 2, got {n}")
    return pi_bo(n)


class HomotopyGroupTable:
    """Residue table behind :func:`pi_bo` / :func:`stable_so`, exposed for
    inspection and cross-checking."""

    residues = dict((r, g.kind) for r, g in _PI_BO_MOD8.items())


class QuadraticData:
    """Coefficient group, boundary element d(1), and the values of nu on a
    basis.  ``stable`` asserts nu is a homomorphism (forces d(1) = 0).

    For the order-two-squared group, ``stable_component`` names which bit of
    the pair carries the stable (homomorphism) part; the other bit is the
    quadratic part.
    """

    __slots__ = ("group", "boundary_element", "basis_values", "stable", "stable_component")

    def __init__(self, group, boundary_element, basis_values, stable=False,
                 stable_component=0):
        if isinstance(group, str):
            group = BY_KIND[group] if group in BY_KIND else CoefficientGroup(group)
        self.group = group
        self.boundary_element = group.validate(boundary_element)
        self.basis_values = tuple(group.validate(v) for v in basis_values)
        self.stable = bool(stable)
        if self.stable and not group.is_zero(self.boundary_element):
            raise InputError("stable data requires boundary element zero")
        if stable_component not in (0, 1):
            raise InputError("stable_component must be 0 or 1")
        self.stable_component = stable_component

    @property
    def rank(self) -> int:
        return len(self.basis_values)

    def replace_values(self, values) -> "QuadraticData":
        return QuadraticData(self.group, self.boundary_element, values,
                             self.stable, self.stable_component)

    def to_dict(self) -> dict:
        elem = lambda a: list(a) if isinstance(a, tuple) else a
        out = {
            "group": self.group.kind,
            "boundary_element": elem(self.boundary_element),
            "values": [elem(v) for v in self.basis_values],
            "stable": self.stable,
        }
        if self.group.kind == CoefficientGroup.Z2xZ2:
            out["stable_component"] = self.stable_component
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "QuadraticData":
        return cls(
            d["group"],
            _elem_from_json(d["boundary_element"]),
            [_elem_from_json(v) for v in d["values"]],
            d.get("stable", False),
            d.get("stable_component", 0),
        )

    def __eq__(self, other):
        return (
            isinstance(other, QuadraticData)
            and self.group == other.group
            and self.boundary_element == other.boundary_element
            and self.basis_values == other.basis_values
            and self.stable == other.stable
            and self.stable_component == other.stable_component
        )

    def __repr__(self):
        return (f"QuadraticData({self.group.kind}, d1={self.boundary_element}, "
                f"values={list(self.basis_values)}, stable={self.stable})")


def _elem_from_json(v):
    return tuple(v) if isinstance(v, list) else v


class IntersectionTriple:
    """Middle dimension, intersection form, normal data, and Euler number.

    The form's symmetry sign is pinned to ``(-1)^n``.  ``boundary`` is
    ``None`` for closed pieces or ``"homology-sphere"`` for pieces to be
    glued along a homology-sphere boundary.
    """

    __slots__ = ("n", "form", "nu", "euler", "boundary")

    def __init__(self, n: int, form, nu: QuadraticData, euler: int,
                 boundary: Optional[str] = None):
        if n < 2:
            raise InputError(f"middle dimension must be >= 2, got {n}")
        eps = 1 if n % 2 == 0 else -1
        if isinstance(form, BilinearForm):
            if form.epsilon != eps:
                raise InputError(
                    f"form symmetry {form.epsilon} does not match (-1)^{n}"
                )
        else:
            form = BilinearForm(form, eps)
        if nu.rank != form.rank:
            raise DimensionMismatchError(
                f"nu has {nu.rank} values but the form has rank {form.rank}"
            )
        if boundary not in (None, HOMOLOGY_SPHERE):
            raise InputError(f"unsupported boundary tag {boundary!r}")
        self.n = n
        self.form = form
        self.nu = nu
        self.euler = int(euler)
        self.boundary = boundary

    @property
    def rank(self) -> int:
        return self.form.rank

    @property
    def epsilon(self) -> int:
        return self.form.epsilon

    def is_closed(self) -> bool:
        return self.boundary is None

    @classmethod
    def closed(cls, n, form, nu, euler=None):
        """Closed triple; when ``euler`` is omitted it defaults to the value
        of a highly connected closed manifold, 2 + (-1)^n * rank."""
        if euler is None:
            sign = 1 if n % 2 == 0 else -1
            euler = 2 + sign * nu.rank
        return cls(n, form, nu, euler)

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "form": self.form.matrix.to_rows(),
            "nu": self.nu.to_dict(),
            "euler": self.euler,
        }
        if self.boundary is not None:
            out["boundary"] = self.boundary
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "IntersectionTriple":
        return cls(d["n"], d["form"], QuadraticData.from_dict(d["nu"]),
                   d["euler"], d.get("boundary"))

    def __repr__(self):
        return (f"IntersectionTriple(n={self.n}, rank={self.rank}, "
                f"euler={self.euler}, boundary={self.boundary!r})")


def eval_form(t: IntersectionTriple, x: Sequence[int], y: Sequence[int]) -> int:
    """Lambda(x, y) = x^T (Gram) y."""
    return t.form.evaluate(x, y)


def eval_nu(t: IntersectionTriple, x: Sequence[int]):
    """Closed-form extension of nu from basis values.

    nu(sum a_i e_i) = sum a_i nu(e_i)
                    + sum_i C(a_i, 2) d Lambda(e_i, e_i)
                    + sum_{i<j} a_i a_j d Lambda(e_i, e_j)

    where d g means g times the boundary element.  With a zero boundary
    element this is the homomorphism extension.
    """
    if len(x) != t.rank:
        raise DimensionMismatchError("vector length does not match rank")
    g = t.nu.group
    d1 = t.nu.boundary_element
    acc = g.zero()
    for i, a in enumerate(x):
        a = int(a)
        if a == 0:
            continue
        acc = g.add(acc, g.scale(a, t.nu.basis_values[i]))
        coeff = a * (a - 1) // 2
        if coeff:
            acc = g.add(acc, g.scale(coeff * t.form.matrix[i, i], d1))
    for i in range(t.rank):
        if x[i] == 0:
            continue
        for j in range(i + 1, t.rank):
            if x[j] == 0:
                continue
            acc = g.add(acc, g.scale(int(x[i]) * int(x[j]) * t.form.matrix[i, j], d1))
    return acc


class SubgroupIndex(NamedTuple):
    """Index descriptor of the image of the stable normal map inside
    pi_n(BO): the generator multiple ``k`` in the range 0 <= k < |pi_n(BO)|
    plus a flag separating whole-group from trivial image when the ambient
    group is finite."""

    k: int
    whole_group: bool


def index_of(t: IntersectionTriple) -> SubgroupIndex:
    """Index of image(s nu) inside pi_n(BO).

    Needs stable data; the ambient group is read off the Bott table and must
    match the triple's coefficient group.
    """
    if not t.nu.stable:
        raise IndexUndefinedError("index is defined through the stable map")
    ambient = pi_bo(t.n)
    if t.nu.group != ambient:
        raise InsufficientInputError(
            f"triple carries {t.nu.group.kind} values but pi_{t.n}(BO) is "
            f"{ambient.kind}"
        )
    vals = t.nu.basis_values
    if ambient == TRIVIAL:
        return SubgroupIndex(0, True)
    if ambient == INTEGERS:
        g = 0
        for v in vals:
            g = gcd(g, abs(v))
        return SubgroupIndex(g, g == 1)
    # order two: k = 0 either way, the flag separates the two subgroups
    return SubgroupIndex(0, any(v != 0 for v in vals))


def _check_compatible(a: IntersectionTriple, b: IntersectionTriple, what: str):
    if a.n != b.n:
        raise MismatchedTriplesError(f"{what}: middle dimensions {a.n} != {b.n}")
    if a.nu.group != b.nu.group:
        raise MismatchedTriplesError(
            f"{what}: coefficient groups {a.nu.group.kind} != {b.nu.group.kind}"
        )
    if a.nu.boundary_element != b.nu.boundary_element:
        raise MismatchedTriplesError(f"{what}: boundary elements differ")
    if a.nu.stable != b.nu.stable:
        raise MismatchedTriplesError(f"{what}: stability flags differ")
    if a.nu.stable_component != b.nu.stable_component:
        raise MismatchedTriplesError(f"{what}: stable components differ")


def direct_sum(a: IntersectionTriple, b: IntersectionTriple) -> IntersectionTriple:
    """Connected-sum model on middle homology: block form, concatenated nu
    values, Euler numbers added with the closed even-dimensional correction
    e(A # B) = e(A) + e(B) - 2."""
    _check_compatible(a, b, "direct sum")
    if not (a.is_closed() and b.is_closed()):
        raise MismatchedTriplesError("direct sum is defined for closed pieces")
    form = a.form.direct_sum(b.form)
    nu = QuadraticData(
        a.nu.group,
        a.nu.boundary_element,
        a.nu.basis_values + b.nu.basis_values,
        a.nu.stable,
        a.nu.stable_component,
    )
    return IntersectionTriple(a.n, form, nu, a.euler + b.euler - 2)


def glue_along_homology_sphere(a: IntersectionTriple, b: IntersectionTriple) -> IntersectionTriple:
    """Closed double from two pieces with homology-sphere boundary.

    Orientation reversal negates the second form; the stable bundle data is
    orientation-independent so nu values pass through unchanged.  The glued
    Euler number is e(A) + e(B): the common boundary is odd-dimensional and
    contributes chi = 0.
    """
    if a.boundary != HOMOLOGY_SPHERE or b.boundary != HOMOLOGY_SPHERE:
        raise UnsupportedGluingError(
            "gluing is implemented only for pieces flagged with a "
            "homology-sphere boundary; supply the glued triple directly otherwise"
        )
    _check_compatible(a, b, "gluing")
    form = a.form.direct_sum(b.form.negate())
    nu = QuadraticData(
        a.nu.group,
        a.nu.boundary_element,
        a.nu.basis_values + b.nu.basis_values,
        a.nu.stable,
        a.nu.stable_component,
    )
    return IntersectionTriple(a.n, form, nu, a.euler + b.euler)
