"""
Exhaustive checks, one registered class per statement.

Each check returns None on success and a small JSON-ready dict describing
the offending input otherwise. Domain errors raised while checking are
turned into counterexamples by TheoremABC.check_block.
"""

import logging
from itertools import islice
from typing import Any, Dict, Iterable, List, Optional

from schubert_complexity import bruhat, kl_variety, matrix_schubert, statmodel
from schubert_complexity.diagram import components, opposite_rothe
from schubert_complexity.graph_kit import cone_dimension
from schubert_complexity.oracle.base import Counterexample, TheoremABC
from schubert_complexity.oracle.subword import bruhat_subword_leq
from schubert_complexity.perm_core import (
    TORIC_PATTERNS,
    Permutation,
    all_permutations,
    avoids,
    coxeter_length,
    diagram_size,
    identity,
    longest,
    reduced_word,
)

logger = logging.getLogger(__name__)

SYM_ONE = Permutation((3, 4, 1, 2))


def below(w: Permutation) -> List[Permutation]:
    """All v <= w."""
    return bruhat.elements(identity(w.n), w)


def _partitions(
    v: Permutation, w: Permutation, options: Dict[str, Any]
) -> Dict[bruhat.Partition, int]:
    """
    Chain-graph component partitions of [v, w] with their chain counts.

    Exact over all maximal chains unless a chain_limit is set, in which case
    only the first chains of the depth-first enumeration are sampled.
    """
    limit = options.get("chain_limit")
    if limit is None:
        return bruhat.chain_partitions(v, w)
    sampled: Dict[bruhat.Partition, int] = {}
    for chain in islice(bruhat.maximal_chains(v, w), limit):
        parts = frozenset(frozenset(p) for p in bruhat.chain_graph(chain).components())
        sampled[parts] = sampled.get(parts, 0) + 1
    return sampled


def _as_lists(parts: bruhat.Partition) -> List[List[int]]:
    return sorted(sorted(p) for p in parts)


class ToricEquivalence(TheoremABC):
    name = "toric-equivalence"
    description = "Y_w is toric iff L'(w) splits into hooks iff w avoids 4312 and 3412"
    scale = "single"

    def check(self, w: Permutation, options: Dict[str, Any]) -> Optional[Counterexample]:
        by_hooks = matrix_schubert.is_toric(w)
        by_patterns = avoids(w, *TORIC_PATTERNS)
        by_complexity = matrix_schubert.complexity(w) == 0
        if by_hooks == by_patterns == by_complexity:
            return None
        return {
            "w": str(w),
            "hooks": by_hooks,
            "patterns": by_patterns,
            "complexity_zero": by_complexity,
        }


class NoComplexityOne(TheoremABC):
    name = "no-complexity-one"
    description = "No matrix Schubert variety Y_w has complexity one"
    scale = "single"

    def check(self, w: Permutation, options: Dict[str, Any]) -> Optional[Counterexample]:
        if matrix_schubert.complexity(w) == 1:
            return {"w": str(w)}
        return None


class ReflectionTheorem(TheoremABC):
    name = "reflection-theorem"
    description = "Staircase labels predict toricity of Y_{w s_M} and the weight cone change"
    scale = "pair"
    min_n = 2

    def check(self, w: Permutation, options: Dict[str, Any]) -> Optional[Counterexample]:
        if not matrix_schubert.is_toric(w):
            return None
        for verdict in matrix_schubert.scan_reflections(w):
            if not verdict.agrees or verdict.cone_rule_holds is False:
                return verdict.to_dict()
        return None


class BruhatCoherence(TheoremABC):
    name = "bruhat-coherence"
    description = "Rank-table Bruhat order equals the subword order"
    scale = "interval"

    def check(self, w: Permutation, options: Dict[str, Any]) -> Optional[Counterexample]:
        for v in all_permutations(w.n):
            by_rank = bruhat.leq(v, w)
            if by_rank != bruhat_subword_leq(v, w):
                return {"v": str(v), "w": str(w), "rank_leq": by_rank}
        return None


class ChainIndependence(TheoremABC):
    name = "chain-independence"
    description = "All maximal chains of [v, w] give chain graphs with the same components"
    scale = "interval"

    def check(self, w: Permutation, options: Dict[str, Any]) -> Optional[Counterexample]:
        for v in below(w):
            found = _partitions(v, w, options)
            if len(found) > 1:
                return {
                    "v": str(v),
                    "w": str(w),
                    "partitions": [
                        {"components": _as_lists(parts), "chains": count}
                        for parts, count in found.items()
                    ],
                }
        return None


class KLChainComplexity(TheoremABC):
    name = "kl-chain-complexity"
    description = "complexity(N_{v,w}) equals the cyclomatic number of every chain graph"
    scale = "interval"

    def check(self, w: Permutation, options: Dict[str, Any]) -> Optional[Counterexample]:
        for v in below(w):
            expected = kl_variety.complexity(v, w)
            steps = w.length - v.length
            for parts, count in _partitions(v, w, options).items():
                # a chain graph has one edge per step on n vertices
                nu = steps - v.n + len(parts)
                if nu != expected:
                    return {
                        "v": str(v),
                        "w": str(w),
                        "complexity": expected,
                        "nu": nu,
                        "components": _as_lists(parts),
                        "chains": count,
                    }
        return None


class CoverStep(TheoremABC):
    name = "cover-step"
    description = "Going down one cover in w changes the complexity by 0 or 1"
    scale = "interval"

    def check(self, w: Permutation, options: Dict[str, Any]) -> Optional[Counterexample]:
        for v in below(w):
            top = kl_variety.complexity(v, w)
            for _, u in bruhat.cocovers(w):
                if not bruhat.leq(v, u):
                    continue
                step = top - kl_variety.complexity(v, u)
                if step not in (0, 1):
                    return {"v": str(v), "w": str(w), "u": str(u), "step": step}
        return None


class PairsCyclomatic(TheoremABC):
    name = "pairs-cyclomatic"
    description = (
        "nu of the free-cell graph is |P_v|, its components number |C_v| + |A_v|, "
        "and complexity(N_{v,w}) = |P_v| - |D°(w)| when Z^(v) has no unexpected zeros"
    )
    scale = "pair"

    def check(self, v: Permutation, options: Dict[str, Any]) -> Optional[Counterexample]:
        top = longest(v.n)
        # against w0 no free cell is an unexpected zero
        analytics = kl_variety.no_unexpected_zero_analytics(v, top)
        reversed_pairs = kl_variety.pairs(v, reverse_ties=True)
        if len(reversed_pairs) != len(analytics.pairs):
            return {
                "v": str(v),
                "pairs": len(analytics.pairs),
                "pairs_reversed_ties": len(reversed_pairs),
            }
        for w in bruhat.elements(v, top):
            if kl_variety.unexpected_zeros(v, w):
                continue
            by_pairs = len(analytics.pairs) - diagram_size(w)
            direct = kl_variety.complexity(v, w)
            if by_pairs != direct:
                return {"v": str(v), "w": str(w), "by_pairs": by_pairs, "complexity": direct}
        return None


class RectangleFormula(TheoremABC):
    name = "rectangle"
    description = "Case formulas for N_{v,w} when D°(w) is one rectangle"
    scale = "pair"

    def check(self, w: Permutation, options: Dict[str, Any]) -> Optional[Counterexample]:
        d = opposite_rothe(w)
        if not d.cells or len(components(d)) != 1:
            return None
        rows = {i for i, _ in d.cells}
        cols = {j for _, j in d.cells}
        if len(rows) * len(cols) != len(d):
            return None
        for v in below(w):
            result = kl_variety.rectangle_complexity(v, w)
            if not result.agrees:
                return {"v": str(v), "w": str(w), **result.to_dict()}
        return None


class W0tFormula(TheoremABC):
    name = "w0t"
    description = "Case formulas for N_{v,w} with w = w0 * t_{l,k}"
    scale = "pair"
    min_n = 2

    def check(self, v: Permutation, options: Dict[str, Any]) -> Optional[Counterexample]:
        n = v.n
        for l in range(1, n):
            for k in range(l + 1, n + 1):
                if not bruhat.leq(v, kl_variety.w0t(n, l, k)):
                    continue
                result = kl_variety.w0t_complexity(v, l, k)
                if not result.agrees:
                    return {"v": str(v), "l": l, "k": k, **result.to_dict()}
        return None


class SymLowCone(TheoremABC):
    name = "sym-low-cone"
    description = "The symmetric weight cone has the dimension of sigma_w"
    scale = "pair"

    def check(self, w: Permutation, options: Dict[str, Any]) -> Optional[Counterexample]:
        block = matrix_schubert.analyze_sym_low(w)
        plain = cone_dimension(matrix_schubert.weight_graph(w), verify_rank=False)
        if block.dim_sigma != plain:
            return {"w": str(w), "dim_sigma_sym": block.dim_sigma, "dim_sigma": plain}
        if w == SYM_ONE and block.complexity != 1:
            return {"w": str(w), "complexity_sym": block.complexity}
        return None


class SymEmbedding(TheoremABC):
    name = "sym-embedding"
    description = "Embedding v in S_2m keeps SW above the diagonal empty and the complexity"
    scale = "single"

    def n_values(self, n_max: int) -> Iterable[int]:
        return range(1, (n_max + 1) // 2 + 1)

    def check(self, v: Permutation, options: Dict[str, Any]) -> Optional[Counterexample]:
        w = matrix_schubert.embed_for_symmetric(v)
        block = matrix_schubert.analyze_sym_low(w)
        plain = matrix_schubert.complexity(v)
        if block.sw_upper != 0 or block.complexity != plain:
            return {
                "v": str(v),
                "w": str(w),
                "sw_upper": block.sw_upper,
                "complexity_sym": block.complexity,
                "complexity": plain,
            }
        return None


def realizable_statements(m: int) -> List[statmodel.CIStatement]:
    """Every statement of the two realizable interval shapes on m variables."""
    found = []
    for i in range(1, m):
        for j in range(i + 1, m + 1):
            a = frozenset(range(1, i + 1))
            b = frozenset(range(j, m + 1))
            found.append(statmodel.CIStatement(m, a, b))
            if j - i >= 2:
                found.append(statmodel.CIStatement(m, a, b, frozenset(range(i + 1, j))))
    return found


class CIMSComplexity(TheoremABC):
    name = "ci-ms-complexity"
    description = "Realizable CI statements: complexity formula, toricity and generator round trip"
    scale = "pair"
    min_n = 2

    def size(self, n: int) -> int:
        return len(realizable_statements(n))

    def items(self, n: int, start: int, stop: int) -> Iterable[Any]:
        return realizable_statements(n)[start:stop]

    def check(self, stmt: statmodel.CIStatement, options: Dict[str, Any]) -> Optional[Counterexample]:
        value = statmodel.ms_ci_complexity(stmt)
        if (value == 0) != (len(stmt.c) <= 1):
            return {"statement": stmt.to_dict(), "complexity": value}
        w = statmodel.ci_realize_ms(stmt)
        assert w is not None
        from_w = {str(p) for p in statmodel.symmetric_generators(w)}
        from_stmt = {str(p) for p in statmodel.ci_condition(stmt).minors()}
        if from_w != from_stmt:
            return {
                "statement": stmt.to_dict(),
                "w": str(w),
                "only_fulton": sorted(from_w - from_stmt),
                "only_ci": sorted(from_stmt - from_w),
            }
        if statmodel.ci_from_permutation(w) != stmt:
            return {"statement": stmt.to_dict(), "w": str(w), "inverse": "mismatch"}
        return None


KL_CI_N_MAX = 8


def kl_ci_parameters(m: int, n_max: int = KL_CI_N_MAX) -> List[Dict[str, int]]:
    """Every statement shape on m variables, at every permutation size m + 1..n_max."""
    shapes = [(k, l, 1) for k in range(1, m) for l in range(1, m - k + 1)]
    shapes += [(k, m + 1 - k, 2) for k in range(2, m)]
    return [
        {"m": m, "k": k, "l": l, "case": case, "n": n}
        for n in range(m + 1, n_max + 1)
        for k, l, case in shapes
    ]


class KLCIComplexity(TheoremABC):
    name = "kl-ci"
    description = "KL CI pairs have complexity m(m-1)/2 - |A||B|"
    scale = "single"
    min_n = 2

    def size(self, n: int) -> int:
        return len(kl_ci_parameters(n))

    def items(self, n: int, start: int, stop: int) -> Iterable[Any]:
        return kl_ci_parameters(n)[start:stop]

    def check(self, params: Dict[str, int], options: Dict[str, Any]) -> Optional[Counterexample]:
        statmodel.kl_ci_construct(
            params["m"], params["k"], params["l"], params["case"], n=params["n"]
        )
        return None


class RationalMLE(TheoremABC):
    name = "rational-mle"
    description = "Quasi-independence models from toric Y_w have rational MLE"
    scale = "single"

    def check(self, w: Permutation, options: Dict[str, Any]) -> Optional[Counterexample]:
        if not matrix_schubert.is_toric(w):
            return None
        for model in statmodel.qi_from_toric(w):
            if not statmodel.rational_mle(model):
                return {"w": str(w), "model": model.to_dict()}
        return None


class LengthWitnesses(TheoremABC):
    name = "length-witnesses"
    description = "Inversions, n(n-1)/2 - |D°(w)| and reduced word length agree"
    scale = "single"

    def check(self, w: Permutation, options: Dict[str, Any]) -> Optional[Counterexample]:
        length, _ = coxeter_length(w)
        word = reduced_word(w)
        if len(word) != length:
            return {"w": str(w), "length": length, "reduced_word": word}
        return None


class SubintervalToric(TheoremABC):
    name = "subinterval-toric"
    description = "Every subinterval of a toric interval is toric"
    scale = "interval"

    def check(self, w: Permutation, options: Dict[str, Any]) -> Optional[Counterexample]:
        for v in below(w):
            if not kl_variety.is_toric(v, w):
                continue
            inside = bruhat.elements(v, w)
            for x in inside:
                for y in inside:
                    if bruhat.leq(x, y) and not kl_variety.is_toric(x, y):
                        return {"v": str(v), "w": str(w), "x": str(x), "y": str(y)}
        return None
