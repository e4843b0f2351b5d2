"""Homology and cohomology groups, cycle/cut lattices, graph-likeness.

The first homology group is the kernel of the boundary map; the first
cohomology group is the cokernel of the coboundary map.  Over the integers
both are computed from the Smith normal form of the boundary matrix.  The
graph-likeness report evaluates the five equivalent conditions separately
and insists that they agree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .boundary import boundary_matrix, canonical_inner_product
from .core import (
    Chain,
    Cochain,
    InternalInconsistencyError,
    OrientedHypergraph,
    Ring,
)
from .exact_linalg import (
    ExactMatrix,
    ModuleStructure,
    annihilator_basis,
    image_basis,
    image_rank,
    is_direct_summand,
    kernel_basis,
    lattice_contains,
    quotient_structure,
    smith_normal_form,
    solve_integer,
    sublattice_equal,
)


@dataclass(frozen=True)
class HomologyReport:
    """First homology and cohomology of a hypergraph over one ring."""

    ring: Ring
    h1: ModuleStructure
    h1_basis: tuple[Chain, ...]
    h1_cohomology: ModuleStructure
    rank_image_boundary: int


def homology(hypergraph: OrientedHypergraph, ring: Ring) -> HomologyReport:
    """Compute the first homology (cycle module with basis) and the first
    cohomology (cochains modulo coboundaries) over the requested ring.

    Over the integers the homology is always free of rank |E| minus the
    boundary rank, while the cohomology may carry torsion; over the
    rationals only the free ranks remain.
    """
    matrix = boundary_matrix(hypergraph, Ring.INTEGER)
    rank = image_rank(matrix)
    basis_vectors = kernel_basis(matrix, ring)
    basis = tuple(Chain.from_vector(1, vector, ring) for vector in basis_vectors)
    h1 = ModuleStructure(len(basis), ())
    if ring is Ring.INTEGER:
        h1_cohomology = quotient_structure(matrix.transpose())
    else:
        h1_cohomology = ModuleStructure(hypergraph.edge_count - rank, ())
    return HomologyReport(
        ring=ring,
        h1=h1,
        h1_basis=basis,
        h1_cohomology=h1_cohomology,
        rank_image_boundary=rank,
    )


def annihilator_of_cycles(hypergraph: OrientedHypergraph) -> list[list[int]]:
    """Basis of the 1-cochain lattice that vanishes on every cycle."""
    matrix = boundary_matrix(hypergraph, Ring.INTEGER)
    cycles = kernel_basis(matrix, Ring.INTEGER)
    return annihilator_basis(cycles, hypergraph.edge_count)


@dataclass(frozen=True)
class Witness:
    """Concrete vector certifying that a condition fails.

    ``basis`` says which indexed basis the coefficients refer to ("edges"
    for 1-chains/1-cochains, "vertices" for 0-chains/0-cochains).
    """

    condition: str
    description: str
    basis: str
    coefficients: tuple


@dataclass(frozen=True)
class GraphLikenessReport:
    """Truth values of the five equivalent graph-likeness conditions.

    All five must agree; when they are false, ``witnesses`` carries one
    concrete counterexample per condition.
    """

    canonical_iso: bool
    annihilator_equals_coboundary_image: bool
    cuts_equal_cycle_perp: bool
    boundary_image_direct_summand: bool
    hom_dual_iso: bool
    witnesses: tuple[Witness, ...]

    @property
    def graph_like(self) -> bool:
        return all(self.conditions().values())

    def conditions(self) -> dict[str, bool]:
        return {
            "canonical_iso": self.canonical_iso,
            "annihilator_equals_coboundary_image": self.annihilator_equals_coboundary_image,
            "cuts_equal_cycle_perp": self.cuts_equal_cycle_perp,
            "boundary_image_direct_summand": self.boundary_image_direct_summand,
            "hom_dual_iso": self.hom_dual_iso,
        }


def _annihilator_witness(hypergraph, cycles, annihilator, transpose):
    """Lexicographically first cochain in the annihilator that is not a
    coboundary: standard edge cochains first, then annihilator generators."""
    m = hypergraph.edge_count
    for e in range(m):
        unit = [0] * m
        unit[e] = 1
        in_annihilator = all(
            sum(a * b for a, b in zip(unit, cycle)) == 0 for cycle in cycles
        )
        if in_annihilator and solve_integer(transpose, unit) is None:
            return (
                tuple(unit),
                f"standard cochain on edge e{e + 1} kills every cycle but is not a coboundary",
            )
    for generator in annihilator:
        if solve_integer(transpose, generator) is None:
            return tuple(generator), "annihilator generator that is not a coboundary"
    raise InternalInconsistencyError("annihilator exceeds coboundary image but no witness found")


def graph_likeness(hypergraph: OrientedHypergraph) -> GraphLikenessReport:
    """Evaluate the five graph-likeness conditions, each by its own route.

    The canonical-isomorphism condition is recorded through its computable
    form, the lattice equality of the cycle annihilator with the coboundary
    image.  Disagreement among the five booleans raises
    :class:`InternalInconsistencyError`; it is never a valid result.
    """
    m = hypergraph.edge_count
    matrix = boundary_matrix(hypergraph, Ring.INTEGER)
    transpose = matrix.transpose()
    cycles = kernel_basis(matrix, Ring.INTEGER)
    annihilator = annihilator_basis(cycles, m)
    coboundary_image = image_basis(transpose, Ring.INTEGER)

    cond_annihilator = sublattice_equal(annihilator, coboundary_image, m)
    cond_canonical = cond_annihilator

    # same lattices pulled back to chain coefficients and compared afresh
    cut_lattice = image_basis(transpose, Ring.INTEGER)
    cycle_perp = annihilator_basis(kernel_basis(matrix, Ring.INTEGER), m)
    cond_cut_perp = sublattice_equal(cut_lattice, cycle_perp, m)

    cond_summand = is_direct_summand(matrix)
    cond_hom = cohomology_hom_iso_check(hypergraph)

    values = [cond_canonical, cond_annihilator, cond_cut_perp, cond_summand, cond_hom]
    if len(set(values)) != 1:
        raise InternalInconsistencyError(
            f"graph-likeness conditions disagree: {values}"
        )

    witnesses: list[Witness] = []
    if not cond_annihilator:
        coefficients, description = _annihilator_witness(
            hypergraph, cycles, annihilator, transpose
        )
        witnesses.append(
            Witness("canonical_iso", description, "edges", coefficients)
        )
        witnesses.append(
            Witness("annihilator_equals_coboundary_image", description, "edges", coefficients)
        )
        witnesses.append(
            Witness(
                "cuts_equal_cycle_perp",
                "chain orthogonal to every cycle that lies outside the cut lattice",
                "edges",
                coefficients,
            )
        )
    if not cond_summand:
        decomposition = smith_normal_form(matrix)
        position = next(i for i, d in enumerate(decomposition.diagonal) if d > 1)
        divisor = decomposition.diagonal[position]
        vector = tuple(decomposition.u_inverse.column(position))
        witnesses.append(
            Witness(
                "boundary_image_direct_summand",
                f"0-chain whose {divisor}-multiple is a boundary although it is not one itself",
                "vertices",
                vector,
            )
        )
    if not cond_hom:
        decomposition = smith_normal_form(transpose)
        position = next(i for i, d in enumerate(decomposition.diagonal) if d > 1)
        divisor = decomposition.diagonal[position]
        vector = tuple(decomposition.u_inverse.column(position))
        witnesses.append(
            Witness(
                "hom_dual_iso",
                f"cochain whose class has finite order {divisor} in the cohomology",
                "edges",
                vector,
            )
        )

    return GraphLikenessReport(
        canonical_iso=cond_canonical,
        annihilator_equals_coboundary_image=cond_annihilator,
        cuts_equal_cycle_perp=cond_cut_perp,
        boundary_image_direct_summand=cond_summand,
        hom_dual_iso=cond_hom,
        witnesses=tuple(witnesses),
    )


@dataclass(frozen=True)
class DecompositionReport:
    """Cycle and cut bases with the diagnostics of how they sit in the
    1-chain module: orthogonality, trivial intersection, and whether their
    sum is everything (over the integers it may not be)."""

    ring: Ring
    cycle_basis: tuple[Chain, ...]
    cut_basis: tuple[Chain, ...]
    mutually_orthogonal: bool
    intersection_trivial: bool
    dimensions_sum_to_edge_count: bool
    spans_all_chains: bool
    missing_chain: Chain | None


def cycle_cut_decomposition(hypergraph: OrientedHypergraph, ring: Ring) -> DecompositionReport:
    """Compute the cycle module and cut module bases over ``ring`` and
    check how they decompose the 1-chains.

    Over the rationals the two are orthogonal complements.  Over the
    integers they still intersect trivially but their sum can be a proper
    sublattice; the first standard edge chain outside the sum is reported.
    """
    m = hypergraph.edge_count
    matrix = boundary_matrix(hypergraph, Ring.INTEGER)
    cycle_vectors = kernel_basis(matrix, ring)
    cut_vectors = image_basis(matrix.transpose(), ring)
    cycle_basis = tuple(Chain.from_vector(1, v, ring) for v in cycle_vectors)
    cut_basis = tuple(Chain.from_vector(1, v, ring) for v in cut_vectors)

    orthogonal = all(
        canonical_inner_product(c, b) == ring.zero for c in cycle_basis for b in cut_basis
    )

    stacked = ExactMatrix.from_rows(
        [list(map(Fraction, v)) for v in cycle_vectors]
        + [list(map(Fraction, v)) for v in cut_vectors],
        Ring.RATIONAL,
        cols=m,
    )
    combined_rank = image_rank(stacked)
    intersection_trivial = combined_rank == len(cycle_vectors) + len(cut_vectors)
    dimensions_sum = len(cycle_vectors) + len(cut_vectors) == m

    missing_chain = None
    if ring is Ring.INTEGER:
        generators = [list(v) for v in cycle_vectors] + [list(v) for v in cut_vectors]
        spans = True
        for e in range(m):
            unit = [0] * m
            unit[e] = 1
            if not lattice_contains(generators, unit, m):
                spans = False
                missing_chain = Chain.unit(1, e, Ring.INTEGER)
                break
    else:
        spans = combined_rank == m

    return DecompositionReport(
        ring=ring,
        cycle_basis=cycle_basis,
        cut_basis=cut_basis,
        mutually_orthogonal=orthogonal,
        intersection_trivial=intersection_trivial,
        dimensions_sum_to_edge_count=dimensions_sum,
        spans_all_chains=spans,
        missing_chain=missing_chain,
    )


def orthogonal_decomposition_rational(hypergraph: OrientedHypergraph) -> DecompositionReport:
    """Rational cycle/cut decomposition; the two bases span complementary
    orthogonal subspaces of the 1-chains."""
    return cycle_cut_decomposition(hypergraph, Ring.RATIONAL)


@dataclass(frozen=True)
class PerpComparison:
    """Result of comparing two lattices that should coincide, with a
    witness generator on the offending side when they do not."""

    equal: bool
    witness: Chain | None


def cycles_equal_cut_perp_check(hypergraph: OrientedHypergraph) -> PerpComparison:
    """Check that the cycle lattice is exactly the orthogonal complement of
    the cut lattice over the integers.

    This holds for every hypergraph, so a False answer indicates a bug in
    the lattice machinery rather than a property of the input.
    """
    m = hypergraph.edge_count
    matrix = boundary_matrix(hypergraph, Ring.INTEGER)
    cuts = image_basis(matrix.transpose(), Ring.INTEGER)
    perp = annihilator_basis(cuts, m)
    cycles = kernel_basis(matrix, Ring.INTEGER)
    if sublattice_equal(perp, cycles, m):
        return PerpComparison(True, None)
    for vector in perp:
        if not lattice_contains(cycles, vector, m):
            return PerpComparison(False, Chain.from_vector(1, vector, Ring.INTEGER))
    for vector in cycles:
        if not lattice_contains(perp, vector, m):
            return PerpComparison(False, Chain.from_vector(1, vector, Ring.INTEGER))
    raise InternalInconsistencyError("lattices differ but no witness found")


def boundary_functional_lattice(hypergraph: OrientedHypergraph) -> list[list[int]]:
    """Image lattice of the map sending a 1-chain to its pairing
    functional: the column lattice of the boundary Gram matrix.

    Always a sublattice of the coboundary image; the containment can be
    proper.
    """
    matrix = boundary_matrix(hypergraph, Ring.INTEGER)
    gram = matrix.transpose() @ matrix
    return image_basis(gram, Ring.INTEGER)


def represents_dualized_boundary(hypergraph: OrientedHypergraph, candidate: Cochain) -> bool:
    """Whether the 0-cochain is, modulo the coboundary kernel, the dual of
    the boundary of some integer 1-chain.

    Solved as one stacked integer system: boundary columns next to a basis
    of the coboundary kernel.
    """
    if candidate.dimension != 0:
        raise ValueError("expected a 0-cochain")
    if candidate.ring is not Ring.INTEGER:
        raise ValueError("membership is decided over the integers")
    n = hypergraph.vertex_count
    matrix = boundary_matrix(hypergraph, Ring.INTEGER)
    kernel_columns = kernel_basis(matrix.transpose(), Ring.INTEGER)
    columns = matrix.columns() + kernel_columns
    system = ExactMatrix.from_columns(columns, Ring.INTEGER, rows=n)
    return solve_integer(system, candidate.to_vector(n)) is not None


def boundary_functional_injectivity_check(
    hypergraph: OrientedHypergraph, samples: int = 50, seed: int = 0
) -> bool:
    """Check that pairing functionals identify chains up to cycles.

    Verifies that the Gram matrix has the same rank as the boundary map and
    that sampled chains with a vanishing functional are themselves cycles.
    """
    matrix = boundary_matrix(hypergraph, Ring.INTEGER)
    gram = matrix.transpose() @ matrix
    if image_rank(gram) != image_rank(matrix):
        return False
    rng = random.Random(seed)
    m = hypergraph.edge_count
    for _ in range(samples):
        vector = [rng.randint(-3, 3) for _ in range(m)]
        if all(x == 0 for x in gram.apply(vector)) and any(
            x != 0 for x in matrix.apply(vector)
        ):
            return False
    return True


def cohomology_hom_iso_check(hypergraph: OrientedHypergraph) -> bool:
    """Whether restricting cochain classes to cycles is an isomorphism onto
    the dual of the homology: the cohomology must be torsion-free of the
    same rank as the homology."""
    matrix = boundary_matrix(hypergraph, Ring.INTEGER)
    structure = quotient_structure(matrix.transpose())
    homology_rank = hypergraph.edge_count - image_rank(matrix)
    return not structure.torsion and structure.free_rank == homology_rank
