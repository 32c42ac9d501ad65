"""Minimal-degree certificates of non-k-colorability over GF(p).

A graph is not k-colorable exactly when some combination of the ideal
generators equals 1.  Working modulo every x_i^k - 1 (exponents reduced mod
k), it suffices to combine the edge generators alone, and the coefficients
can be taken with every monomial degree congruent to 1 mod k; for k > 3 no
degree-1 combination exists.  The search therefore assembles, degree class
by degree class, an exact linear system over GF(p) whose columns are
(edge, coefficient-monomial) pairs and whose rows are quotient-ring
monomials, and solves it with the kernels in linalg.  A found edge-only
certificate can be lifted to a full-ring identity by tracking the quotients
of division by the vertex generators.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, replace
from typing import Callable, Mapping

from . import linalg
from .fields import PrimeField
from .graphs import Graph
from .ideals import (
    ColoringIdeal,
    _check_characteristic,
    field_from_json,
    field_to_json,
    graph_from_json,
    graph_to_json,
    mk_edge_poly,
    mk_vertex_poly,
    quotient_reduce,
)
from .poly import Monomial, Polynomial, parse_poly, render


class InvalidCertificate(ValueError):
    """The coefficients do not combine to the constant 1."""


def admissible_degrees(k: int, d_max: int) -> list[int]:
    """Degrees at which an edge-coefficient certificate can exist: congruent
    to 1 mod k, starting at 1 for k in {2, 3} and at k + 1 for larger k."""
    if k < 2:
        raise ValueError("k must be at least 2")
    start = 1 if k <= 3 else k + 1
    return list(range(start, d_max + 1, k))


def _coefficient_monomials(n: int, k: int, degrees: set[int]) -> list[tuple[int, ...]]:
    """Exponent tuples over n variables with every exponent < k and total
    degree in the given set, in deterministic (degree, tuple) order."""
    if not degrees:
        return []
    d_max = max(degrees)
    span = range(min(k, d_max + 1))
    out = [t for t in itertools.product(span, repeat=n) if sum(t) in degrees]
    out.sort(key=lambda t: (sum(t), tuple(-e for e in t)))
    return out


@dataclass
class LinearSystem:
    """The degree-d certificate system for one graph.

    Columns are (edge, monomial) pairs; conceptually there is one row per
    quotient-ring monomial (n_rows = k^n), but only rows touched by some
    column are materialized, plus the constant row carrying the rhs 1.
    """

    graph: Graph
    k: int
    field: PrimeField
    degree: int
    columns: list[tuple[tuple[int, int], Monomial]]
    col_rows: list[list[int]]
    row_monomials: list[tuple[int, ...]]
    rhs_row: int

    @property
    def n_rows(self) -> int:
        return self.k ** self.graph.n

    @property
    def n_cols(self) -> int:
        return len(self.columns)


def assemble_system(g: Graph, k: int, field: PrimeField, d: int) -> LinearSystem:
    """Sparse system whose solutions are the edge-coefficient certificates of
    degree at most d in the quotient ring (monomial degrees = 1 mod k)."""
    if not isinstance(field, PrimeField):
        raise ValueError("certificate systems are assembled over prime fields")
    _check_characteristic(field, k)
    if d < 0:
        raise ValueError("degree bound must be nonnegative")
    n = g.n
    degrees = {t for t in range(1, d + 1) if t % k == 1 % k}
    mono_tuples = _coefficient_monomials(n, k, degrees)
    monomials = [Monomial({v + 1: e for v, e in enumerate(t) if e}) for t in mono_tuples]

    row_index: dict[tuple[int, ...], int] = {}
    row_monomials: list[tuple[int, ...]] = []

    def row_id(t: tuple[int, ...]) -> int:
        rid = row_index.get(t)
        if rid is None:
            rid = len(row_monomials)
            row_index[t] = rid
            row_monomials.append(t)
        return rid

    rhs_row = row_id((0,) * n)
    columns = []
    col_rows = []
    for u, v in g.edges():
        ui, vi = u - 1, v - 1
        for t, mono in zip(mono_tuples, monomials):
            rows = []
            for l in range(k):
                prod = list(t)
                prod[ui] = (prod[ui] + l) % k
                prod[vi] = (prod[vi] + k - 1 - l) % k
                rows.append(row_id(tuple(prod)))
            columns.append(((u, v), mono))
            col_rows.append(rows)
    return LinearSystem(g, k, field, d, columns, col_rows, row_monomials, rhs_row)


_SUBSET_THRESHOLD = 100_000
_FILL_BUDGET = 30_000_000


def _solve_wide(system: LinearSystem) -> list[int] | None:
    """Feasibility-first strategy for very wide odd-p systems.

    Solves deterministic growing random column subsets: a subsystem solution
    extends by zeros to the full system, so any hit is final, while subset
    infeasibility just widens the ladder.  Only a genuinely infeasible
    system reaches the full width (and then the fill budget fails loudly
    rather than exhausting memory).
    """
    n_cols = system.n_cols
    rng = random.Random(0)
    size = int(1.35 * len(system.row_monomials))
    while True:
        if size >= n_cols:
            subset = range(n_cols)
        else:
            subset = sorted(rng.sample(range(n_cols), size))
        entries = [[(r, 1) for r in system.col_rows[j]] for j in subset]
        x = linalg.solve_sparse(
            entries, {system.rhs_row: 1}, system.field, entry_budget=_FILL_BUDGET
        )
        if x is not None:
            full = [0] * n_cols
            for jj, j in enumerate(subset):
                full[j] = x[jj]
            return full
        if size >= n_cols:
            return None
        size *= 2


def solve_system(system: LinearSystem) -> dict[tuple[tuple[int, int], Monomial], int] | None:
    """One solution of the system (nonzero entries only), or None if it is
    inconsistent.  Deterministic: bit-packed dense elimination over GF(2),
    sparse Markowitz-pivot elimination for odd p (through a growing ladder
    of column subsets beyond _SUBSET_THRESHOLD columns)."""
    field = system.field
    if field.p == 2:
        x = linalg.solve_gf2(len(system.row_monomials), system.col_rows, [system.rhs_row])
    elif system.n_cols > _SUBSET_THRESHOLD:
        x = _solve_wide(system)
    else:
        entries = [[(r, 1) for r in rows] for rows in system.col_rows]
        x = linalg.solve_sparse(entries, {system.rhs_row: 1}, field)
    if x is None:
        return None
    return {system.columns[j]: c for j, c in enumerate(x) if c}


@dataclass
class Certificate:
    """Coefficients combining the generators to 1, witnessing that no proper
    k-coloring exists.

    edge_coeffs holds the quotient-ring coefficients of the edge generators
    (every monomial degree = 1 mod k); vertex_coeffs, when present, completes
    the identity in the full polynomial ring.  infeasible_degrees records the
    smaller admissible degrees that were proven infeasible by the search.
    """

    field: PrimeField
    k: int
    edge_coeffs: dict[tuple[int, int], Polynomial]
    vertex_coeffs: dict[int, Polynomial] | None = None
    infeasible_degrees: tuple[int, ...] = ()

    def __post_init__(self):
        for e, beta in self.edge_coeffs.items():
            for m in beta.terms:
                if m.degree % self.k != 1 % self.k:
                    raise ValueError(
                        f"coefficient monomial {m} for edge {e} has degree "
                        f"{m.degree}, not 1 mod {self.k}"
                    )

    @property
    def degree(self) -> int:
        """Max total degree over the edge coefficients."""
        return max((b.degree() for b in self.edge_coeffs.values()), default=-1)

    @property
    def lifted_degree(self) -> int | None:
        """Max degree over all coefficients once lifted; None before lifting."""
        if self.vertex_coeffs is None:
            return None
        return max(
            [self.degree] + [g.degree() for g in self.vertex_coeffs.values()]
        )


def search_certificate(
    g: Graph,
    k: int,
    field: PrimeField,
    d_max: int | None = None,
    progress: Callable[[str], None] | None = None,
) -> Certificate | None:
    """Certificate at the smallest admissible degree <= d_max at which the
    system is consistent; None when every admissible degree fails (the graph
    may be k-colorable, or d_max too small -- this search does not decide).
    """
    _check_characteristic(field, k)
    if d_max is None:
        d_max = 3 * k + 1
    infeasible: list[int] = []
    for d in admissible_degrees(k, d_max):
        system = assemble_system(g, k, field, d)
        solution = solve_system(system)
        if progress is not None:
            status = "infeasible" if solution is None else "certificate found"
            progress(
                f"degree {d}: {status} "
                f"({system.n_cols} columns, {len(system.row_monomials)} rows)"
            )
        if solution is None:
            infeasible.append(d)
            continue
        edge_coeffs: dict[tuple[int, int], dict[Monomial, int]] = {}
        for (edge, mono), c in solution.items():
            edge_coeffs.setdefault(edge, {})[mono] = c
        betas = {e: Polynomial(field, terms) for e, terms in sorted(edge_coeffs.items())}
        return Certificate(field, k, betas, None, tuple(infeasible))
    return None


def verify_certificate(cert: Certificate, ideal: ColoringIdeal) -> bool:
    """True iff the coefficients combine the generators to the constant 1:
    in the quotient ring for edge-only certificates, in the full polynomial
    ring when vertex coefficients are present."""
    if cert.field != ideal.field or cert.k != ideal.k:
        raise ValueError("certificate and ideal disagree on field or k")
    for e in cert.edge_coeffs:
        if e not in ideal.edge_polys:
            raise ValueError(f"certificate names edge {e} not in the graph")
    field = cert.field
    one = Polynomial.constant(field, field.one)
    total = Polynomial.zero(field)
    for e, beta in cert.edge_coeffs.items():
        total = total + beta * ideal.edge_polys[e]
    if cert.vertex_coeffs is None:
        return quotient_reduce(total, cert.k) == one
    for v, gamma in cert.vertex_coeffs.items():
        total = total + gamma * mk_vertex_poly(v, cert.k, field)
    return total == one


def _split_off_vertex_quotients(f: Polynomial, k: int):
    """Write f = r + sum_i q_i * (x_i^k - 1) with every exponent of r below k.

    Telescopes each term x^a = x^(a mod k) * prod_i (x_i^k)^(q_i) through
    y^q - 1 = (y - 1)(1 + y + ... + y^(q-1)); both outputs come back as term
    dicts, quotients keyed by vertex.
    """
    field = f.field
    reduced: dict[Monomial, object] = {}
    quotients: dict[int, dict[Monomial, object]] = {}

    def bump(acc, m, c):
        s = field.add(acc.get(m, field.zero), c)
        if field.is_zero(s):
            acc.pop(m, None)
        else:
            acc[m] = s

    for m, c in f.terms.items():
        base = {v: e % k for v, e in m.exps if e % k}
        high = [(v, e // k) for v, e in m.exps if e >= k]
        bump(reduced, Monomial(base), c)
        prefix: dict[int, int] = dict(base)
        for v, q in high:
            for t in range(q):
                gm = dict(prefix)
                gm[v] = gm.get(v, 0) + k * t
                bump(quotients.setdefault(v, {}), Monomial(gm), c)
            prefix[v] = prefix.get(v, 0) + k * q
    return reduced, quotients


def lift_certificate(cert: Certificate, g: Graph, k: int) -> Certificate:
    """Complete a quotient-ring certificate to a full-ring identity by adding
    vertex-generator coefficients; raises InvalidCertificate when the input
    does not verify in the quotient ring."""
    if k != cert.k:
        raise ValueError(f"certificate is for k={cert.k}, not k={k}")
    field = cert.field
    edges = set(g.edges())
    for e in cert.edge_coeffs:
        if e not in edges:
            raise ValueError(f"certificate names edge {e} not in the graph")
    total = Polynomial.zero(field)
    for e, beta in cert.edge_coeffs.items():
        total = total + beta * mk_edge_poly(e[0], e[1], k, field)
    reduced, quotients = _split_off_vertex_quotients(total, k)
    if Polynomial(field, reduced) != Polynomial.constant(field, field.one):
        raise InvalidCertificate("coefficients do not combine to 1 in the quotient ring")
    vertex_coeffs = {
        v: Polynomial(field, terms).scale(field.neg(field.one))
        for v, terms in sorted(quotients.items())
    }
    vertex_coeffs = {v: p for v, p in vertex_coeffs.items() if not p.is_zero}
    return replace(cert, vertex_coeffs=vertex_coeffs)


# --- JSON interchange --------------------------------------------------------

def certificate_to_json_dict(cert: Certificate, g: Graph) -> dict:
    out = {
        "version": 1,
        "kind": "certificate",
        "field": field_to_json(cert.field),
        "k": cert.k,
        "graph": graph_to_json(g),
        "degree": cert.degree,
        "lifted_degree": cert.lifted_degree,
        "edge_coefficients": {
            f"{u}-{v}": render(p) for (u, v), p in sorted(cert.edge_coeffs.items())
        },
        "vertex_coefficients": None
        if cert.vertex_coeffs is None
        else {str(v): render(p) for v, p in sorted(cert.vertex_coeffs.items())},
        "infeasible_degrees": list(cert.infeasible_degrees),
    }
    return out


def certificate_from_json_dict(data: Mapping) -> tuple[Certificate, Graph]:
    if data.get("kind") != "certificate":
        raise ValueError("not a certificate document")
    field = field_from_json(data["field"])
    if not isinstance(field, PrimeField):
        raise ValueError("certificates are defined over prime fields")
    k = int(data["k"])
    g = graph_from_json(data["graph"])
    edge_coeffs = {}
    for key, text in data["edge_coefficients"].items():
        u, v = sorted(int(x) for x in key.split("-"))
        edge_coeffs[(u, v)] = parse_poly(text, field)
    vertex_coeffs = None
    if data.get("vertex_coefficients") is not None:
        vertex_coeffs = {
            int(v): parse_poly(text, field)
            for v, text in data["vertex_coefficients"].items()
        }
    cert = Certificate(
        field,
        k,
        edge_coeffs,
        vertex_coeffs,
        tuple(data.get("infeasible_degrees", ())),
    )
    return cert, g
