"""Bounded two-sided ideal membership by exact linear algebra.

A semi-decision: a witness is a proof of membership, while a miss at a
bound proves nothing.
"""

import logging
from collections import defaultdict
from collections.abc import Sequence
from dataclasses import dataclass

from sympy.polys.matrices import DomainMatrix

from leavitt.core.constants import WitnessMethod
from leavitt.core.models.element import Element, Monomial
from leavitt.core.models.field import Scalar
from leavitt.core.models.graph import Graph, Path, bundle_ref, split_ref
from leavitt.core.services.algebra.algebra import LeavittAlgebra

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class WitnessTerm:
    """One summand c · left · gens[generator] · right."""

    coefficient: Scalar
    left: Monomial
    generator: int
    right: Monomial


@dataclass(frozen=True)
class MembershipWitness:
    combination: tuple[WitnessTerm, ...]
    bound: int
    method: str = WitnessMethod.ORACLE

    def evaluate(self, algebra: LeavittAlgebra, gens: Sequence[Element]) -> Element:
        total = algebra.zero()
        for term in self.combination:
            piece = algebra.sandwich(term.left, gens[term.generator], term.right)
            total = total + piece.scale(term.coefficient)
        return total


@dataclass(frozen=True)
class NotFoundWithinBound:
    """Inconclusive: no combination of the searched shape reproduces the target."""

    bound: int


def bundle_indices(graph: Graph, elements: Sequence[Element]) -> dict[str, tuple[int, ...]]:
    """Member indices per bundle: those mentioned, plus the smallest unused one."""
    mentioned: dict[str, set[int]] = defaultdict(set)
    for x in elements:
        for ref in x.bundle_refs():
            name, index = split_ref(ref)
            if index is not None:
                mentioned[name].add(index)
    result: dict[str, tuple[int, ...]] = {}
    for b in graph.bundles:
        used = mentioned.get(b.name, set())
        fresh = next(k for k in range(len(used) + 1) if k not in used)
        result[b.name] = tuple(sorted(used | {fresh}))
    return result


def _paths_by_end(
    graph: Graph, indices: dict[str, tuple[int, ...]], max_len: int
) -> dict[str, list[Path]]:
    by_end: dict[str, list[Path]] = defaultdict(list)
    layer = [graph.vertex_path(v) for v in graph.vertices]
    for length in range(max_len + 1):
        for path in layer:
            by_end[path.end].append(path)
        if length == max_len:
            break
        grown: list[Path] = []
        for path in layer:
            refs = [
                *graph.out_edges(path.end),
                *(bundle_ref(b, k) for b in graph.out_bundles(path.end) for k in indices[b]),
            ]
            grown.extend(graph.extend(path, [ref]) for ref in refs)
        layer = grown
    return by_end


def basis_monomials(
    algebra: LeavittAlgebra, max_len: int, indices: dict[str, tuple[int, ...]]
) -> list[Monomial]:
    """Basis-reduced monomials of total length at most ``max_len``."""
    by_end = _paths_by_end(algebra.graph, indices, max_len)
    monomials = [
        Monomial(alpha, beta)
        for paths in by_end.values()
        for alpha in paths
        for beta in paths
        if alpha.length + beta.length <= max_len
    ]
    return sorted(
        (m for m in monomials if algebra.is_basis_monomial(m)), key=Monomial.sort_key
    )


def membership_oracle(
    graph: Graph, gens: Sequence[Element], x: Element, max_len: int
) -> MembershipWitness | NotFoundWithinBound:
    """Search x in span{m₁·gen·m₂ : basis monomials m₁, m₂ of length ≤ max_len}.

    Bounds are tried in increasing order so the witness found uses the
    smallest bound that works. Only factors whose outer vertices meet the
    support of ``x`` and whose inner vertices meet the generator can
    contribute, so the rest are never formed.
    """
    algebra = LeavittAlgebra(graph, x.field)
    algebra.require(x)
    for gen in gens:
        algebra.require(gen)
    if x.is_zero():
        return MembershipWitness((), 0)

    indices = bundle_indices(graph, [*gens, x])
    monomials = basis_monomials(algebra, max_len, indices)
    target_left, target_right = x.left_vertices(), x.right_vertices()

    candidates: list[tuple[int, Monomial, Monomial]] = []
    columns: list[Element] = []
    for bound in range(max_len + 1):
        level = [m for m in monomials if m.length <= bound]
        for i, gen in enumerate(gens):
            lefts = [
                m for m in level if m.left in target_left and m.right in gen.left_vertices()
            ]
            rights = [
                m for m in level if m.left in gen.right_vertices() and m.right in target_right
            ]
            for m1 in lefts:
                for m2 in rights:
                    if max(m1.length, m2.length) != bound:
                        continue
                    column = algebra.sandwich(m1, gen, m2)
                    if not column.is_zero():
                        candidates.append((i, m1, m2))
                        columns.append(column)
        logger.debug("Oracle bound %d: %d candidate products", bound, len(columns))
        solution = _solve(algebra, columns, x)
        if solution is not None:
            combination = tuple(
                WitnessTerm(c, candidates[j][1], candidates[j][0], candidates[j][2])
                for j, c in solution
            )
            return MembershipWitness(combination, bound)
    return NotFoundWithinBound(max_len)


def _solve(
    algebra: LeavittAlgebra, columns: Sequence[Element], x: Element
) -> list[tuple[int, Scalar]] | None:
    """Coefficients c with Σ c_j columns[j] = x, or None."""
    if not columns:
        return None
    rows: dict[Monomial, int] = {}
    dod: dict[int, dict[int, Scalar]] = defaultdict(dict)
    for j, column in enumerate([*columns, x]):
        for monomial, coefficient in column.terms.items():
            row = rows.setdefault(monomial, len(rows))
            dod[row][j] = coefficient
    last = len(columns)
    matrix = DomainMatrix.from_dod(dict(dod), (len(rows), last + 1), algebra.field.domain)
    reduced, pivots = matrix.rref()
    if last in pivots:
        return None
    entries = reduced.to_dod()
    solution = []
    for i, j in enumerate(pivots):
        c = entries.get(i, {}).get(last, algebra.field.zero)
        if not algebra.field.is_zero(c):
            solution.append((j, c))
    return solution
