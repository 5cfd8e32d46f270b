"""Coefficient groups for normal-bundle data.

Four kinds cover every case the decision procedures need: the trivial
group, the integers, order two, and order two squared.  Elements are plain
Python values (0, ints, bits, bit pairs) so triples stay JSON-friendly.
"""

from __future__ import annotations

from .errors import InputError


class CoefficientGroup:
    TRIVIAL = "trivial"
    Z = "Z"
    Z2 = "Z2"
    Z2xZ2 = "Z2xZ2"

    _KINDS = (TRIVIAL, Z, Z2, Z2xZ2)

    def __init__(self, kind: str):
        if kind not in self._KINDS:
            raise InputError(f"unknown coefficient group kind {kind!r}")
        self.kind = kind

    # --- element protocol -------------------------------------------------

    def zero(self):
        if self.kind == self.Z2xZ2:
            return (0, 0)
        return 0

    def validate(self, a):
        if self.kind == self.TRIVIAL:
            if a != 0:
                raise InputError("trivial group element must be 0")
            return 0
        if self.kind == self.Z:
            if not isinstance(a, int) or isinstance(a, bool):
                raise InputError(f"integer group element expected, got {a!r}")
            return a
        if self.kind == self.Z2:
            if a not in (0, 1):
                raise InputError(f"Z2 element must be 0 or 1, got {a!r}")
            return a
        a = tuple(a) if not isinstance(a, tuple) else a
        if len(a) != 2 or any(b not in (0, 1) for b in a):
            raise InputError(f"Z2xZ2 element must be a bit pair, got {a!r}")
        return a

    def add(self, a, b):
        if self.kind == self.TRIVIAL:
            return 0
        if self.kind == self.Z:
            return a + b
        if self.kind == self.Z2:
            return (a + b) % 2
        return ((a[0] + b[0]) % 2, (a[1] + b[1]) % 2)

    def negate(self, a):
        if self.kind == self.Z:
            return -a
        return a  # every element of the finite kinds is its own inverse

    def scale(self, k: int, a):
        """Integer multiple k*a."""
        if self.kind == self.TRIVIAL:
            return 0
        if self.kind == self.Z:
            return k * a
        if self.kind == self.Z2:
            return (k * a) % 2
        return ((k * a[0]) % 2, (k * a[1]) % 2)

    def is_zero(self, a) -> bool:
        return a == self.zero()

    def elements(self):
        """All elements; only available for the finite kinds."""
        if self.kind == self.TRIVIAL:
            return [0]
        if self.kind == self.Z2:
            return [0, 1]
        if self.kind == self.Z2xZ2:
            return [(0, 0), (0, 1), (1, 0), (1, 1)]
        raise InputError("the integers are not enumerable")

    def is_finite(self) -> bool:
        return self.kind != self.Z

    def __eq__(self, other):
        return isinstance(other, CoefficientGroup) and self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return f"CoefficientGroup({self.kind!r})"


TRIVIAL = CoefficientGroup(CoefficientGroup.TRIVIAL)
INTEGERS = CoefficientGroup(CoefficientGroup.Z)
ORDER_TWO = CoefficientGroup(CoefficientGroup.Z2)
ORDER_TWO_SQUARED = CoefficientGroup(CoefficientGroup.Z2xZ2)

BY_KIND = {
    CoefficientGroup.TRIVIAL: TRIVIAL,
    CoefficientGroup.Z: INTEGERS,
    CoefficientGroup.Z2: ORDER_TWO,
    CoefficientGroup.Z2xZ2: ORDER_TWO_SQUARED,
}
