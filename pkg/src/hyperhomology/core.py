"""Domain types: oriented hypergraphs, chains, cochains, exact scalars.

Coefficients are plain ``int`` (ring ``Ring.INTEGER``) or
``fractions.Fraction`` (ring ``Ring.RATIONAL``), so all arithmetic is exact
and never overflows.  Fractions stay in lowest terms with a positive
denominator by construction.  Vertex order and edge order of a hypergraph
fix the bases of the 0-chain and 1-chain groups and the layout of every
matrix and report derived from them.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping


class Ring(Enum):
    """Coefficient ring: exact integers or exact rationals."""

    INTEGER = "int"
    RATIONAL = "rat"

    def coerce(self, value):
        """Convert ``value`` into this ring, rejecting lossy conversions."""
        if isinstance(value, bool):
            raise TypeError("booleans are not scalars")
        if self is Ring.INTEGER:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise ValueError(f"{value} is not an integer")
                return int(value)
            if isinstance(value, int):
                return value
            raise TypeError(f"cannot coerce {value!r} to the integers")
        if isinstance(value, (int, Fraction)):
            return Fraction(value)
        raise TypeError(f"cannot coerce {value!r} to the rationals")

    @property
    def zero(self):
        return 0 if self is Ring.INTEGER else Fraction(0)

    @property
    def one(self):
        return 1 if self is Ring.INTEGER else Fraction(1)


class HypergraphValidationError(ValueError):
    """An oriented hypergraph violates one of its structural invariants."""

    def __init__(self, violations: Iterable[str]):
        self.violations = tuple(violations)
        super().__init__("; ".join(self.violations))


class InternalInconsistencyError(RuntimeError):
    """Two routes that must agree produced different answers: a bug."""


def validation_report(vertices, edges) -> list[str]:
    """List every violated hypergraph invariant; an empty list means valid.

    Checked: duplicate vertex ids, tails/heads overlap within an edge, edge
    vertices missing from the vertex list, and pairs of edges that are
    inverses of each other.  Two edges with identical (tails, heads) are
    allowed (parallel edges); an edge equal to the *inverse* of another is
    not.  A single edge with empty tails and heads is allowed, but a second
    one counts as an inverse pair (it is its own inverse).
    """
    violations = []
    seen = set()
    for v in vertices:
        if v in seen:
            violations.append(f"duplicate vertex {v!r}")
        seen.add(v)
    known = set(vertices)
    normalized = []
    for j, (tails, heads) in enumerate(edges):
        tails = frozenset(tails)
        heads = frozenset(heads)
        overlap = tails & heads
        if overlap:
            names = ", ".join(sorted(repr(v) for v in overlap))
            violations.append(f"edge {j}: tails and heads overlap on {names}")
        for v in sorted(tails | heads, key=repr):
            if v not in known:
                violations.append(f"edge {j}: unknown vertex {v!r}")
        normalized.append((tails, heads))
    for j, (tails, heads) in enumerate(normalized):
        for i in range(j):
            if normalized[i] == (heads, tails):
                violations.append(f"edges {i} and {j}: inverse pair")
    return violations


@dataclass(frozen=True, init=False)
class OrientedHypergraph:
    """A finite ordered vertex list plus ordered oriented edges.

    Each edge is a pair (tails, heads) of disjoint vertex sets: the edge
    points away from its tails and towards its heads.  Construction
    validates the data and raises :class:`HypergraphValidationError` on any
    violation.
    """

    vertices: tuple
    edges: tuple

    def __init__(self, vertices, edges):
        object.__setattr__(self, "vertices", tuple(vertices))
        object.__setattr__(
            self,
            "edges",
            tuple((frozenset(tails), frozenset(heads)) for tails, heads in edges),
        )
        problems = validation_report(self.vertices, self.edges)
        if problems:
            raise HypergraphValidationError(problems)

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def vertex_index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    def tails(self, j: int) -> frozenset:
        return self.edges[j][0]

    def heads(self, j: int) -> frozenset:
        return self.edges[j][1]

    def is_graph(self) -> bool:
        """True when every edge has exactly one tail and one head."""
        return all(len(t) == 1 and len(h) == 1 for t, h in self.edges)


def validate(hypergraph: OrientedHypergraph) -> list[str]:
    """Re-run the invariant checks on an existing hypergraph."""
    return validation_report(hypergraph.vertices, hypergraph.edges)


@dataclass(frozen=True, init=False)
class _FormalSum:
    """Sparse formal sum over an indexed basis; shared by chains/cochains.

    Stored coefficients are always nonzero and all lie in ``ring``
    (canonical sparse form).  Instances are immutable; arithmetic returns
    new objects of the same class and never mixes rings or dimensions.
    """

    dimension: int
    coefficients: Mapping
    ring: Ring

    def __init__(self, dimension: int, coefficients, ring: Ring):
        if dimension not in (0, 1):
            raise ValueError("dimension must be 0 (vertices) or 1 (edges)")
        clean = {}
        for index, value in dict(coefficients).items():
            value = ring.coerce(value)
            if value:
                clean[int(index)] = value
        object.__setattr__(self, "dimension", dimension)
        object.__setattr__(self, "coefficients", clean)
        object.__setattr__(self, "ring", ring)

    @classmethod
    def zero(cls, dimension: int, ring: Ring):
        return cls(dimension, {}, ring)

    @classmethod
    def unit(cls, dimension: int, index: int, ring: Ring):
        return cls(dimension, {index: ring.one}, ring)

    @classmethod
    def from_vector(cls, dimension: int, values, ring: Ring):
        return cls(dimension, {i: v for i, v in enumerate(values)}, ring)

    def coefficient(self, index: int):
        return self.coefficients.get(index, self.ring.zero)

    @property
    def support(self) -> tuple:
        return tuple(sorted(self.coefficients))

    def is_zero(self) -> bool:
        return not self.coefficients

    def to_vector(self, length: int) -> list:
        if self.coefficients and max(self.coefficients) >= length:
            raise IndexError("coefficient index out of range for requested length")
        return [self.coefficients.get(i, self.ring.zero) for i in range(length)]

    def with_ring(self, ring: Ring):
        """Convert between rings; integer -> rational always works, the
        reverse requires every coefficient to be integral."""
        if ring is self.ring:
            return self
        return type(self)(self.dimension, self.coefficients, ring)

    def _check_compatible(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.dimension != self.dimension:
            raise ValueError("dimension mismatch")
        if other.ring is not self.ring:
            raise ValueError("ring mismatch")

    def __add__(self, other):
        self._check_compatible(other)
        merged = dict(self.coefficients)
        for index, value in other.coefficients.items():
            merged[index] = merged.get(index, 0) + value
        return type(self)(self.dimension, merged, self.ring)

    def __neg__(self):
        return type(self)(
            self.dimension, {i: -v for i, v in self.coefficients.items()}, self.ring
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, factor):
        factor = self.ring.coerce(factor)
        return type(self)(
            self.dimension, {i: factor * v for i, v in self.coefficients.items()}, self.ring
        )

    def __rmul__(self, factor):
        return self.scale(factor)


class Chain(_FormalSum):
    """Formal linear combination of vertices (dim 0) or edges (dim 1)."""


class Cochain(_FormalSum):
    """Homomorphism from chains to the scalar ring, stored by its values on
    the basis.  Evaluation is the coefficient-wise dot product."""

    def evaluate(self, chain: Chain):
        if not isinstance(chain, Chain):
            raise TypeError("cochains evaluate on chains")
        if chain.dimension != self.dimension:
            raise ValueError("dimension mismatch")
        if chain.ring is not self.ring:
            raise ValueError("ring mismatch")
        total = self.ring.zero
        for index, value in self.coefficients.items():
            coefficient = chain.coefficients.get(index)
            if coefficient is not None:
                total += value * coefficient
        return total

    __call__ = evaluate


def chain_to_cochain(chain: Chain) -> Cochain:
    """Reinterpret a chain's coefficients as the values of a cochain."""
    return Cochain(chain.dimension, chain.coefficients, chain.ring)


def cochain_to_chain(cochain: Cochain) -> Chain:
    """Inverse reinterpretation; composed with ``chain_to_cochain`` it is
    the identity in both directions."""
    return Chain(cochain.dimension, cochain.coefficients, cochain.ring)
