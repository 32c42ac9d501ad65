"""One-pass Groebner bases for coloring ideals of chordal graphs.

Sweeping a perfect elimination order, each removed vertex v with residual
clique neighborhood U contributes the complete homogeneous polynomial
S_{k-|U|} in the clique variables plus x_v (or x_v^k - 1 when U is empty).
Under the lex order that ranks earlier-removed vertices higher, the leading
monomials are pure powers x_v^{k-|U|} in pairwise distinct variables, which
makes the collection a Groebner basis and makes counting and coloring
extraction direct.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import EliminationRecord, Graph, NotChordalError, perfect_elimination_order
from .ideals import _check_characteristic, mk_vertex_poly
from .poly import LEX, Polynomial, TermOrder, complete_homogeneous


@dataclass(frozen=True)
class GroebnerBasis:
    """Basis polynomials plus the term order they are a basis under.

    `peo` carries the elimination records that produced a chordal basis;
    it is None for bases built by the completion oracle.
    """

    polys: tuple[Polynomial, ...]
    order: TermOrder
    peo: tuple[EliminationRecord, ...] | None = None


@dataclass(frozen=True)
class BasisResult:
    """Either a basis, or infeasibility (the trivial basis {1}) witnessed by a
    simplicial vertex whose residual clique already has k or more members."""

    basis: GroebnerBasis | None
    witness: EliminationRecord | None = None

    @property
    def infeasible(self) -> bool:
        return self.basis is None


def elimination_term_order(peo: tuple[EliminationRecord, ...]) -> TermOrder:
    """Lex order ranking the first-removed vertex largest."""
    n = len(peo)
    return TermOrder(LEX, {rec.vertex: n - i for i, rec in enumerate(peo)})


def basis_polynomial(record: EliminationRecord, k: int, field) -> Polynomial:
    """The contribution of one elimination record.

    For a nonempty clique U: S_{k-|U|}(x_u for u in U, x_v), with C(k, |U|)
    terms.  For an empty clique the correct generator is x_v^k - 1 (the bare
    complete homogeneous S_k(x_v) = x_v^k only vanishes at 0, not at the
    roots of unity).
    """
    _check_characteristic(field, k)
    r = len(record.clique)
    if r > k:
        raise ValueError(f"clique of size {r} exceeds k={k}")
    if r == 0:
        return mk_vertex_poly(record.vertex, k, field)
    variables = sorted(record.clique) + [record.vertex]
    return complete_homogeneous(k - r, variables, field)


def build_groebner_basis(g: Graph, k: int, field) -> BasisResult | None:
    """Groebner basis of the k-coloring ideal of a chordal graph.

    Returns None when g is not chordal.  Returns an infeasible result (the
    trivial basis) as soon as the sweep removes a simplicial vertex with k or
    more clique neighbors, which certifies a (k+1)-clique; otherwise one
    polynomial per vertex, in removal order, under the elimination lex order.
    """
    _check_characteristic(field, k)
    peo = perfect_elimination_order(g)
    if peo is None:
        return None
    for rec in peo:
        if len(rec.clique) >= k:
            return BasisResult(basis=None, witness=rec)
    order = elimination_term_order(peo)
    polys = tuple(basis_polynomial(rec, k, field) for rec in peo)
    return BasisResult(basis=GroebnerBasis(polys, order, peo))


def quotient_dimension(result: BasisResult, k: int) -> int:
    """Number of standard monomials: the product of (k - |U_i|) over the
    elimination records, i.e. the dimension of the quotient vector space.
    Zero when the result is infeasible."""
    if result.infeasible:
        return 0
    return math.prod(k - len(rec.clique) for rec in result.basis.peo)


def extract_coloring(result: BasisResult, k: int) -> dict[int, int] | None:
    """Back-substitute along the elimination order (last removed first),
    giving each vertex the smallest color unused by its clique neighbors.
    None when the result is infeasible."""
    if result.infeasible:
        return None
    coloring: dict[int, int] = {}
    for rec in reversed(result.basis.peo):
        used = {coloring[u] for u in rec.clique}
        coloring[rec.vertex] = next(c for c in range(k) if c not in used)
    return coloring


def count_colorings_chordal(g: Graph, k: int) -> int:
    """Exact number of proper k-colorings of a chordal graph, as the product
    of per-vertex color choices along a perfect elimination order."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    peo = perfect_elimination_order(g)
    if peo is None:
        raise NotChordalError("graph is not chordal")
    count = 1
    for rec in peo:
        choices = k - len(rec.clique)
        if choices <= 0:
            return 0
        count *= choices
    return count
