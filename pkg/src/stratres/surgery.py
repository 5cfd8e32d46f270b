"""Homology-level surgery: kill a hyperbolic pair, iterate to rank zero.

The step consumes a basis whose lambda block is isotropic and dual to the
mu block (mu-mu pairings are unconstrained) and a lambda index whose
normal-bundle value vanishes.  The killed pair drops out; the surviving
classes keep their pairings and nu values, which is exactly the relation
set the homology bookkeeping produces.  Euler numbers move by 2 per step,
up for odd middle dimension and down for even (replacing S^n x D^n by
D^(n+1) x S^(n-1) changes chi by -2 (-1)^n).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .decider import LagrangianWitness, SymplecticBasis, decide_elementary, dual_completion
from .errors import InputError, NontrivialNormalBundleError, NotElementaryError
from .triples import IntersectionTriple, QuadraticData, eval_form, eval_nu


@dataclass(frozen=True)
class SurgeryStep:
    killed: Tuple[int, ...]
    basis_before: SymplecticBasis
    result: IntersectionTriple


@dataclass(frozen=True)
class SurgeryTrace:
    steps: Tuple[SurgeryStep, ...]
    final: IntersectionTriple

    def __len__(self):
        return len(self.steps)


def _check_half_basis(t: IntersectionTriple, basis: SymplecticBasis):
    failures = basis.relation_failures(t.form, require_mu_isotropic=False)
    if failures:
        raise InputError(f"basis violates the surgery relations: {failures}")
    if 2 * basis.pairs != t.rank:
        raise InputError(
            f"basis has {basis.pairs} pairs for rank {t.rank}"
        )


def surgery_step(t: IntersectionTriple, basis: SymplecticBasis, r: int) -> IntersectionTriple:
    """Kill the pair (lambda_r, mu_r); the class must have trivial normal
    bundle data (nu(lambda_r) = 0).

    The result is the triple on the surviving basis vectors: their Gram
    matrix, their nu values, middle dimension unchanged, Euler number moved
    by two with the sign of (-1)^(n+1).
    """
    _check_half_basis(t, basis)
    k = basis.pairs
    if not 0 <= r < k:
        raise InputError(f"pair index {r} out of range for {k} pairs")
    lam = basis.lambdas[r]
    if eval_nu(t, lam) != t.nu.group.zero():
        raise NontrivialNormalBundleError(
            f"nu(lambda_{r}) = {eval_nu(t, lam)} != 0"
        )
    survivors = [basis.lambdas[i] for i in range(k) if i != r] + [
        basis.mus[i] for i in range(k) if i != r
    ]
    gram = [[eval_form(t, x, y) for y in survivors] for x in survivors]
    values = [eval_nu(t, x) for x in survivors]
    nu = QuadraticData(t.nu.group, t.nu.boundary_element, values,
                       t.nu.stable, t.nu.stable_component)
    euler_shift = 2 if t.n % 2 == 1 else -2
    return IntersectionTriple(t.n, gram, nu, t.euler + euler_shift, t.boundary)


def reduce_to_sphere(t: IntersectionTriple) -> SurgeryTrace:
    """Iterate surgery steps on an elementary triple until rank zero.

    The Lagrangian witness supplies the lambda block (nu vanishes there by
    construction); dual completion supplies the mu block.  Each step kills
    the last pair and re-reads the standard basis of the smaller triple, so
    the trace has exactly rank/2 steps.
    """
    verdict = decide_elementary(t)
    if not verdict.elementary:
        raise NotElementaryError(verdict.obstruction)
    steps = []
    current = t
    witness: LagrangianWitness = verdict.witness
    generators = witness.generators
    while current.rank > 0:
        mus = dual_completion(current.form, generators)
        basis = SymplecticBasis(tuple(generators), mus)
        nxt = surgery_step(current, basis, basis.pairs - 1)
        steps.append(SurgeryStep(basis.lambdas[-1], basis, nxt))
        current = nxt
        # survivors are listed lambdas-first, so the reduced Lagrangian is
        # the first pairs-1 standard basis vectors of the new triple
        k = basis.pairs - 1
        generators = tuple(
            tuple(int(i == j) for j in range(2 * k)) for i in range(k)
        )
    return SurgeryTrace(tuple(steps), current)
