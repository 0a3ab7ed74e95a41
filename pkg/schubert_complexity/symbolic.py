"""
Determinantal generators.

Fulton's rank conditions for a permutation and the symbolic expansion of
the minors they impose on a matrix whose entries are 0, 1 or variables.
Matrices are sympy matrices; minors are expanded by cofactors along the
sparsest row and, for small minors, checked against the Leibniz formula.
Redundant generators are pruned by Groebner membership tests.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

import sympy as sp

from schubert_complexity.diagram import essential_set, opposite_rothe
from schubert_complexity.exceptions import ConsistencyError, MinorSizeLimitError
from schubert_complexity.perm_core import Cell, Permutation

logger = logging.getLogger(__name__)

DEFAULT_MINOR_SIZE_LIMIT = 8
LEIBNIZ_CHECK_LIMIT = 4


@dataclass(frozen=True)
class RankCondition:
    """rank of rows a..n x columns 1..b is at most bound."""

    a: int
    b: int
    bound: int
    n: int

    @property
    def rows(self) -> List[int]:
        return list(range(self.a, self.n + 1))

    @property
    def cols(self) -> List[int]:
        return list(range(1, self.b + 1))

    @property
    def is_linear(self) -> bool:
        return self.bound == 0

    def __str__(self) -> str:
        return f"r({self.a},{self.b}) <= {self.bound}"


def fulton_conditions(w: Permutation) -> List[RankCondition]:
    """One rank condition per essential cell, ordered by cell."""
    ess = sorted(essential_set(opposite_rothe(w)))
    return [RankCondition(a, b, w.rank(a, b), w.n) for a, b in ess]


def variable_name(prefix: str, i: int, j: int) -> str:
    if i < 10 and j < 10:
        return f"{prefix}{i}{j}"
    return f"{prefix}{i}_{j}"


def variable(prefix: str, i: int, j: int) -> sp.Symbol:
    return sp.Symbol(variable_name(prefix, i, j))


def generic_matrix(n: int, prefix: str = "z") -> Tuple[sp.Matrix, Dict[sp.Symbol, Cell]]:
    cells = {variable(prefix, i, j): (i, j) for i in range(1, n + 1) for j in range(1, n + 1)}
    matrix = sp.Matrix(n, n, lambda r, c: variable(prefix, r + 1, c + 1))
    return matrix, cells


def symmetric_matrix(n: int, prefix: str = "s") -> Tuple[sp.Matrix, Dict[sp.Symbol, Cell]]:
    """Symmetric variable matrix with s_ji identified with s_ij for i <= j."""
    cells = {variable(prefix, i, j): (i, j) for i in range(1, n + 1) for j in range(i, n + 1)}
    matrix = sp.Matrix(
        n, n, lambda r, c: variable(prefix, min(r, c) + 1, max(r, c) + 1)
    )
    return matrix, cells


Monomial = Tuple[int, Tuple[Cell, ...]]


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial in cell variables, kept in canonical order."""

    terms: Tuple[Monomial, ...]
    prefix: str = "z"

    @classmethod
    def from_expr(
        cls, expr: sp.Expr, cells: Dict[sp.Symbol, Cell], prefix: str = "z"
    ) -> "Polynomial":
        expr = sp.expand(expr)
        symbols = sorted(expr.free_symbols, key=lambda s: cells[s])
        if not symbols:
            value = int(expr)
            return cls(((value, ()),) if value else (), prefix).normalized()
        terms = []
        for exponents, coefficient in sp.Poly(expr, *symbols).terms():
            variables: List[Cell] = []
            for symbol, power in zip(symbols, exponents):
                variables.extend([cells[symbol]] * power)
            terms.append((int(coefficient), tuple(sorted(variables))))
        return cls(tuple(terms), prefix).normalized()

    def normalized(self) -> "Polynomial":
        """Order by degree then variables; make the first coefficient positive."""
        terms = sorted(
            (t for t in self.terms if t[0] != 0), key=lambda t: (len(t[1]), t[1])
        )
        if terms and terms[0][0] < 0:
            terms = [(-c, v) for c, v in terms]
        return Polynomial(tuple(terms), self.prefix)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_unit(self) -> bool:
        return len(self.terms) == 1 and not self.terms[0][1]

    @property
    def degree(self) -> int:
        return max((len(v) for _, v in self.terms), default=0)

    def variables(self) -> List[Cell]:
        return sorted({cell for _, v in self.terms for cell in v})

    def to_expr(self) -> sp.Expr:
        return sp.Add(
            *(
                c * sp.Mul(*(variable(self.prefix, i, j) for i, j in v))
                for c, v in self.terms
            )
        )

    def _monomial(self, variables: Tuple[Cell, ...]) -> str:
        return "*".join(variable_name(self.prefix, i, j) for i, j in variables)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for position, (coefficient, variables) in enumerate(self.terms):
            magnitude = abs(coefficient)
            body = self._monomial(variables)
            if not body:
                body = str(magnitude)
            elif magnitude != 1:
                body = f"{magnitude}*{body}"
            if position == 0:
                parts.append(body if coefficient > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if coefficient > 0 else '-'} {body}")
        return " ".join(parts)

    def to_dict(self) -> Dict[str, object]:
        return {
            "text": str(self),
            "terms": [
                {"coefficient": c, "variables": [list(cell) for cell in v]}
                for c, v in self.terms
            ],
        }


def cofactor_det(matrix: sp.Matrix) -> sp.Expr:
    """Determinant by cofactor expansion along the row with most zeros."""
    size = matrix.rows
    if size == 0:
        return sp.Integer(1)
    if size == 1:
        return matrix[0, 0]
    row = max(range(size), key=lambda r: sum(1 for c in range(size) if matrix[r, c] == 0))
    total = sp.Integer(0)
    for col in range(size):
        entry = matrix[row, col]
        if entry == 0:
            continue
        sign = -1 if (row + col) % 2 else 1
        total += sign * entry * cofactor_det(matrix.minor_submatrix(row, col))
    return sp.expand(total)


def leibniz_det(matrix: sp.Matrix) -> sp.Expr:
    """Sum over permutations of signed products."""
    size = matrix.rows
    total = sp.Integer(0)
    for perm in itertools.permutations(range(size)):
        inversions = sum(
            1 for x in range(size) for y in range(x + 1, size) if perm[x] > perm[y]
        )
        term = sp.Integer(-1 if inversions % 2 else 1)
        for r in range(size):
            term *= matrix[r, perm[r]]
            if term == 0:
                break
        total += term
    return sp.expand(total)


def expand_minors(
    matrix: sp.Matrix,
    condition: RankCondition,
    cells: Dict[sp.Symbol, Cell],
    prefix: str = "z",
    size_limit: int = DEFAULT_MINOR_SIZE_LIMIT,
) -> List[Polynomial]:
    """
    All (bound+1)-minors of the south-west submatrix named by the condition.

    Args:
        matrix: n x n sympy matrix with entries 0, 1 or variables
        condition: the rank condition to impose
        cells: map from each variable to its matrix cell
        prefix: variable prefix for rendering
        size_limit: largest submatrix side that may be expanded

    Returns:
        Distinct non-zero minors, normalized, in order of first appearance

    Raises:
        MinorSizeLimitError: if the submatrix is larger than size_limit
    """
    found = block_minors(
        matrix, condition.rows, condition.cols, condition.bound + 1, cells, prefix, size_limit
    )
    if any(p.is_unit for p in found):
        logger.warning(f"Condition {condition} forces a unit minor; it cannot hold")
    return found


def block_minors(
    matrix: sp.Matrix,
    row_set: Sequence[int],
    col_set: Sequence[int],
    size: int,
    cells: Dict[sp.Symbol, Cell],
    prefix: str = "z",
    size_limit: int = DEFAULT_MINOR_SIZE_LIMIT,
) -> List[Polynomial]:
    """
    All size x size minors of the submatrix on the given 1-based rows and columns.

    Raises:
        MinorSizeLimitError: if the submatrix is larger than size_limit
    """
    rows = [r - 1 for r in row_set]
    cols = [c - 1 for c in col_set]
    if max(len(rows), len(cols)) > size_limit:
        raise MinorSizeLimitError(
            f"a {len(rows)}x{len(cols)} block is above the limit {size_limit}"
        )
    if size > min(len(rows), len(cols)):
        return []

    found: List[Polynomial] = []
    seen = set()
    for row_choice in itertools.combinations(rows, size):
        for col_choice in itertools.combinations(cols, size):
            block = matrix.extract(list(row_choice), list(col_choice))
            if any(all(block[r, c] == 0 for c in range(size)) for r in range(size)):
                continue
            det = cofactor_det(block)
            if size <= LEIBNIZ_CHECK_LIMIT and sp.expand(det - leibniz_det(block)) != 0:
                raise ConsistencyError(f"cofactor and Leibniz expansions differ for {block}")
            poly = Polynomial.from_expr(det, cells, prefix)
            if poly.is_zero or poly in seen:
                continue
            seen.add(poly)
            found.append(poly)
    return found


def expand_conditions(
    matrix: sp.Matrix,
    conditions: Sequence[RankCondition],
    cells: Dict[sp.Symbol, Cell],
    prefix: str = "z",
    size_limit: int = DEFAULT_MINOR_SIZE_LIMIT,
) -> List[Polynomial]:
    """Generators from several conditions, deduplicated across conditions."""
    result: List[Polynomial] = []
    for condition in conditions:
        for poly in expand_minors(matrix, condition, cells, prefix, size_limit):
            if poly not in result:
                result.append(poly)
    return result


def _removal_order(poly: Polynomial) -> Tuple[int, int, bool, str]:
    """High degree and long generators are tried first; linear terms last."""
    has_linear = any(len(v) == 1 for _, v in poly.terms)
    return (-poly.degree, -len(poly.terms), has_linear, str(poly))


def reduce_generators(polys: Sequence[Polynomial]) -> List[Polynomial]:
    """
    Drop generators that lie in the ideal of the others.

    Candidates are removed one at a time in a fixed order, each tested for
    membership with a grevlex Groebner basis of the generators still kept.
    The result generates the same ideal and keeps the input order.
    """
    kept = list(dict.fromkeys(p for p in polys if not p.is_zero))
    if len(kept) < 2:
        return kept
    symbols = [
        variable(kept[0].prefix, i, j)
        for i, j in sorted({cell for p in kept for cell in p.variables()})
    ]
    for candidate in sorted(kept, key=_removal_order):
        rest = [p for p in kept if p != candidate]
        if not rest:
            break
        basis = sp.groebner([p.to_expr() for p in rest], *symbols, order="grevlex")
        if basis.contains(candidate.to_expr()):
            logger.debug(f"Dropping redundant generator {candidate}")
            kept = rest
    return kept
