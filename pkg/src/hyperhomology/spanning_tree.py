"""Algebraic spanning trees: rational construction, integrality, search.

A spanning tree here is an edge subset whose fundamental cuts form a basis
of the cut module and whose fundamental cycles form a basis of the cycle
module, each family with Kronecker coordinates on its own index set.  Over
the rationals one always exists; over the integers existence is decided by
exhausting the column bases of the boundary matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .boundary import boundary, boundary_matrix
from .core import Chain, InternalInconsistencyError, OrientedHypergraph, Ring
from .exact_linalg import (
    ExactMatrix,
    RationalEchelon,
    image_basis,
    image_rank,
    kernel_basis,
    solve_integer,
    solve_rational,
    sublattice_equal,
)


class SearchLimitExceeded(RuntimeError):
    """The integer-tree search ran out of budget before exhausting all
    candidate subsets; distinct from a completed search returning none."""

    def __init__(self, examined: int):
        self.examined = examined
        super().__init__(
            f"search limit reached after examining {examined} candidate subsets"
        )


@dataclass(frozen=True)
class SpanningTree:
    """Tree edge set with its fundamental cuts and fundamental cycles.

    ``fundamental_cuts`` maps each tree edge index t to the cut chain x_t;
    ``fundamental_cycles`` maps each chord index e to the cycle chain x_e.
    """

    tree_edges: tuple[int, ...]
    fundamental_cuts: dict
    fundamental_cycles: dict
    ring: Ring

    @property
    def chords(self) -> tuple[int, ...]:
        return tuple(sorted(self.fundamental_cycles))


def _tree_for_subset(hypergraph: OrientedHypergraph, tree_edges) -> SpanningTree:
    """Build cuts and cycles over the rationals for a given edge subset.

    Requires the boundaries of ``tree_edges`` to be linearly independent and
    to span the boundary image (callers guarantee this).  Each chord e gets
    the cycle x_e = e - x'_e, where x'_e is the unique tree combination with
    the same boundary; the cut of a tree edge t then has coefficient 1 at t,
    0 at other tree edges, and -x_e[t] at each chord e.
    """
    tree_edges = tuple(tree_edges)
    matrix = boundary_matrix(hypergraph, Ring.RATIONAL)
    tree_columns = matrix.select_columns(tree_edges)
    cycles: dict[int, Chain] = {}
    for e in range(hypergraph.edge_count):
        if e in tree_edges:
            continue
        weights = solve_rational(tree_columns, matrix.column(e))
        if weights is None:
            raise InternalInconsistencyError(
                "edge boundary not spanned by the selected tree boundaries"
            )
        coefficients = {e: Fraction(1)}
        for position, t in enumerate(tree_edges):
            coefficients[t] = -weights[position]
        cycles[e] = Chain(1, coefficients, Ring.RATIONAL)
    cuts: dict[int, Chain] = {}
    for t in tree_edges:
        coefficients = {t: Fraction(1)}
        for e, cycle in cycles.items():
            value = -cycle.coefficient(t)
            if value:
                coefficients[e] = value
        cuts[t] = Chain(1, coefficients, Ring.RATIONAL)
    return SpanningTree(tree_edges, cuts, cycles, Ring.RATIONAL)


def find_spanning_tree_rational(hypergraph: OrientedHypergraph) -> SpanningTree:
    """Greedy spanning tree over the rationals; always succeeds.

    Scans edges in input order and keeps each edge whose boundary is
    linearly independent of the boundaries kept so far, so the result is
    deterministic for a given edge ordering.
    """
    matrix = boundary_matrix(hypergraph, Ring.RATIONAL)
    echelon = RationalEchelon()
    tree_edges = [j for j in range(hypergraph.edge_count) if echelon.insert(matrix.column(j))]
    return _tree_for_subset(hypergraph, tree_edges)


@dataclass(frozen=True)
class TreeAxiomsReport:
    """Outcome of each independent spanning-tree axiom sub-check."""

    cut_kronecker: bool
    cycle_kronecker: bool
    cycles_are_cycles: bool
    cuts_are_cuts: bool
    counts_consistent: bool
    cuts_span: bool
    cycles_span: bool

    @property
    def ok(self) -> bool:
        return all(
            (
                self.cut_kronecker,
                self.cycle_kronecker,
                self.cycles_are_cycles,
                self.cuts_are_cuts,
                self.counts_consistent,
                self.cuts_span,
                self.cycles_span,
            )
        )


def verify_tree_axioms(hypergraph: OrientedHypergraph, tree: SpanningTree) -> TreeAxiomsReport:
    """Re-check both spanning-tree axioms from scratch.

    Kronecker patterns are read off coefficients; cycle membership applies
    the boundary; cut membership solves for a 0-cochain preimage over the
    tree's ring.  Over the rationals the span checks are rank counts; over
    the integers the cuts and cycles must generate the full cut and cycle
    lattices, which is checked by two-way lattice containment.
    """
    m = hypergraph.edge_count
    ring = tree.ring
    tree_set = set(tree.tree_edges)
    chord_set = set(tree.fundamental_cycles)
    counts_consistent = (
        len(tree.tree_edges) == len(tree_set)
        and tree_set.isdisjoint(chord_set)
        and tree_set | chord_set == set(range(m))
        and set(tree.fundamental_cuts) == tree_set
    )

    cut_kronecker = all(
        tree.fundamental_cuts[t].coefficient(t2) == (ring.one if t2 == t else ring.zero)
        for t in tree.tree_edges
        for t2 in tree.tree_edges
    )
    cycle_kronecker = all(
        tree.fundamental_cycles[e].coefficient(e2) == (ring.one if e2 == e else ring.zero)
        for e in tree.fundamental_cycles
        for e2 in tree.fundamental_cycles
    )
    cycles_are_cycles = all(
        boundary(hypergraph, cycle).is_zero() for cycle in tree.fundamental_cycles.values()
    )

    transpose = boundary_matrix(hypergraph, ring).transpose()
    if ring is Ring.INTEGER:
        cuts_are_cuts = all(
            solve_integer(transpose, cut.to_vector(m)) is not None
            for cut in tree.fundamental_cuts.values()
        )
    else:
        cuts_are_cuts = all(
            solve_rational(transpose, cut.to_vector(m)) is not None
            for cut in tree.fundamental_cuts.values()
        )

    rational_matrix = boundary_matrix(hypergraph, Ring.RATIONAL)
    boundary_rank = image_rank(rational_matrix)
    if ring is Ring.RATIONAL:
        cut_echelon = RationalEchelon()
        cut_rank = sum(cut_echelon.insert(c.to_vector(m)) for c in tree.fundamental_cuts.values())
        cuts_span = cut_rank == len(tree.tree_edges) == boundary_rank
        cycle_echelon = RationalEchelon()
        cycle_rank = sum(
            cycle_echelon.insert(c.to_vector(m)) for c in tree.fundamental_cycles.values()
        )
        cycles_span = cycle_rank == len(chord_set) == m - boundary_rank
    else:
        integer_matrix = boundary_matrix(hypergraph, Ring.INTEGER)
        cut_vectors = [c.to_vector(m) for c in tree.fundamental_cuts.values()]
        cuts_span = sublattice_equal(
            cut_vectors, image_basis(integer_matrix.transpose(), Ring.INTEGER), m
        )
        cycle_vectors = [c.to_vector(m) for c in tree.fundamental_cycles.values()]
        cycles_span = sublattice_equal(
            cycle_vectors, kernel_basis(integer_matrix, Ring.INTEGER), m
        )

    return TreeAxiomsReport(
        cut_kronecker=cut_kronecker,
        cycle_kronecker=cycle_kronecker,
        cycles_are_cycles=cycles_are_cycles,
        cuts_are_cuts=cuts_are_cuts,
        counts_consistent=counts_consistent,
        cuts_span=cuts_span,
        cycles_span=cycles_span,
    )


def is_integral(hypergraph: OrientedHypergraph, tree: SpanningTree) -> bool:
    """Whether a rational tree is integral: every fundamental cycle has
    integer coefficients and every cut cochain is the coboundary of an
    integer 0-cochain."""
    for cycle in tree.fundamental_cycles.values():
        if any(Fraction(v).denominator != 1 for v in cycle.coefficients.values()):
            return False
    transpose = boundary_matrix(hypergraph, Ring.INTEGER).transpose()
    m = hypergraph.edge_count
    for cut in tree.fundamental_cuts.values():
        if any(Fraction(v).denominator != 1 for v in cut.coefficients.values()):
            return False
        vector = [int(Fraction(v)) for v in cut.to_vector(m)]
        if solve_integer(transpose, vector) is None:
            return False
    return True


def _to_integer_tree(tree: SpanningTree) -> SpanningTree:
    return SpanningTree(
        tree.tree_edges,
        {t: c.with_ring(Ring.INTEGER) for t, c in tree.fundamental_cuts.items()},
        {e: c.with_ring(Ring.INTEGER) for e, c in tree.fundamental_cycles.items()},
        Ring.INTEGER,
    )


def find_spanning_tree_integer(
    hypergraph: OrientedHypergraph, search_limit: int = 1_000_000
) -> SpanningTree | None:
    """Exhaustive search for a spanning tree over the integers.

    Candidate subsets are the edge subsets whose boundaries form a column
    basis of the boundary matrix, visited in lexicographic order of edge
    indices; every size-``rank`` subset counts against ``search_limit``.
    Each candidate is built by the rational construction, cross-checked
    against the axioms, and the first integral one is returned with integer
    coefficients.  Returns None when the enumeration completes without a
    hit; raises :class:`SearchLimitExceeded` when the budget runs out first.
    """
    matrix = boundary_matrix(hypergraph, Ring.RATIONAL)
    rank = image_rank(matrix)
    examined = 0
    for subset in itertools.combinations(range(hypergraph.edge_count), rank):
        if examined >= search_limit:
            raise SearchLimitExceeded(examined)
        examined += 1
        echelon = RationalEchelon()
        if not all(echelon.insert(matrix.column(j)) for j in subset):
            continue
        candidate = _tree_for_subset(hypergraph, subset)
        if not verify_tree_axioms(hypergraph, candidate).ok:
            raise InternalInconsistencyError(
                "constructed candidate violates the spanning-tree axioms"
            )
        if is_integral(hypergraph, candidate):
            integral = _to_integer_tree(candidate)
            if not verify_tree_axioms(hypergraph, integral).ok:
                raise InternalInconsistencyError(
                    "integral candidate fails the integer spanning-tree axioms"
                )
            return integral
    return None


def vector_space_spanning_tree(ambient_dim: int, subspace_generators):
    """Spanning tree of rational coordinate space with respect to a subspace.

    Returns ``(tree_positions, cuts, cycles)`` where the cycles are a basis
    of the subspace with Kronecker coordinates on the non-tree positions and
    the cuts are a basis of the orthogonal complement with Kronecker
    coordinates on the tree positions.  This runs the same construction as
    the hypergraph case with the projection modulo the subspace in place of
    the boundary map.
    """
    subspace_basis: list[list[Fraction]] = []
    echelon = RationalEchelon()
    for generator in subspace_generators:
        vector = [Fraction(x) for x in generator]
        if len(vector) != ambient_dim:
            raise ValueError("generator length does not match ambient dimension")
        if echelon.insert(vector):
            subspace_basis.append(vector)

    tracker = RationalEchelon()
    for vector in subspace_basis:
        tracker.insert(vector)
    tree: list[int] = []
    for position in range(ambient_dim):
        unit = [Fraction(0)] * ambient_dim
        unit[position] = Fraction(1)
        if tracker.insert(unit):
            tree.append(position)

    columns = []
    for position in tree:
        unit = [Fraction(0)] * ambient_dim
        unit[position] = Fraction(1)
        columns.append(unit)
    columns.extend(subspace_basis)
    system = ExactMatrix.from_columns(columns, Ring.RATIONAL, rows=ambient_dim)

    cycles: dict[int, list[Fraction]] = {}
    for position in range(ambient_dim):
        if position in tree:
            continue
        unit = [Fraction(0)] * ambient_dim
        unit[position] = Fraction(1)
        weights = solve_rational(system, unit)
        if weights is None:
            raise InternalInconsistencyError("tree positions plus subspace fail to span")
        cycle = list(unit)
        for index, t in enumerate(tree):
            cycle[t] -= weights[index]
        cycles[position] = cycle

    cuts: dict[int, list[Fraction]] = {}
    for t in tree:
        cut = [Fraction(0)] * ambient_dim
        cut[t] = Fraction(1)
        for position, cycle in cycles.items():
            cut[position] = -cycle[t]
        cuts[t] = cut
    return tuple(tree), cuts, cycles
