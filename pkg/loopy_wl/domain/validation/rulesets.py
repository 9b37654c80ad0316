"""Default rule sets: tree-decomposition axioms and configuration bounds."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Dict, List, Tuple

from ...shared.config import AppConfig
from ...shared.dto import ValidationSeverity
from ..graphs import Graph, is_connected
from .engine import RuleSet, RuleSetId, ValidationEngine, ValidationRule

if TYPE_CHECKING:
    from ..cactus.decomposition import TreeDecomposition

Details = Dict[str, float | str]


@dataclass(slots=True)
class DecompositionSubject:
    """A graph together with a candidate tree decomposition of it."""

    graph: Graph
    decomposition: "TreeDecomposition"


def _builder(severity: ValidationSeverity):
    def build(code: str, message: str, func) -> ValidationRule:
        def evaluator(subject) -> Tuple[bool, Details]:
            try:
                passed, details = func(subject)
            except Exception as exc:  # pragma: no cover
                return False, {"error": str(exc)}
            return passed, details

        return ValidationRule(code=code, message=message, severity=severity, evaluator=evaluator)

    return build


_rule = _builder(ValidationSeverity.ERROR)
_warning = _builder(ValidationSeverity.WARNING)
_info = _builder(ValidationSeverity.INFO)


def _tree_decomposition_rules() -> List[ValidationRule]:
    def tree_is_tree(subject: DecompositionSubject) -> Tuple[bool, Details]:
        tree = subject.decomposition.tree
        if tree.n == 0:
            return subject.graph.n == 0, {"nodes": 0}
        ok = tree.m == tree.n - 1 and is_connected(tree)
        return ok, {"nodes": tree.n, "edges": tree.m}

    def bags_nonempty(subject: DecompositionSubject) -> Tuple[bool, Details]:
        td = subject.decomposition
        if len(td.bags) != td.tree.n:
            return False, {"bags": len(td.bags), "nodes": td.tree.n}
        for node, bag in enumerate(td.bags):
            if not bag:
                return False, {"node": node}
            stray = [v for v in bag if not 0 <= v < subject.graph.n]
            if stray:
                return False, {"node": node, "vertex": stray[0]}
        return True, {}

    def edge_coverage(subject: DecompositionSubject) -> Tuple[bool, Details]:
        bags = subject.decomposition.bags
        for u, v in subject.graph.edges():
            if not any(u in bag and v in bag for bag in bags):
                return False, {"edge": f"{u}-{v}"}
        return True, {}

    def vertex_connectivity(subject: DecompositionSubject) -> Tuple[bool, Details]:
        td = subject.decomposition
        holders: Dict[int, set] = {v: set() for v in range(subject.graph.n)}
        for node, bag in enumerate(td.bags):
            for v in bag:
                holders.setdefault(v, set()).add(node)
        for v, nodes in holders.items():
            if not nodes:
                return False, {"vertex": v, "reason": "not in any bag"}
            inner = sum(1 for a, b in td.tree.edges() if a in nodes and b in nodes)
            if inner != len(nodes) - 1:
                return False, {"vertex": v, "reason": "bags do not form a subtree"}
        return True, {}

    def width_at_most_two(subject: DecompositionSubject) -> Tuple[bool, Details]:
        width = subject.decomposition.width
        return width <= 2, {"width": width}

    return [
        _rule("td_tree", "Decomposition tree must be connected and acyclic", tree_is_tree),
        _rule("td_bags_nonempty", "Every tree node needs a non-empty bag of graph vertices", bags_nonempty),
        _rule("td_edge_coverage", "Every graph edge must lie inside some bag", edge_coverage),
        _rule(
            "td_vertex_connectivity",
            "Bags containing a vertex must induce a connected subtree",
            vertex_connectivity,
        ),
        _info("td_width", "Width exceeds the cactus bound of 2", width_at_most_two),
    ]


def _config_rules() -> List[ValidationRule]:
    def positive_budgets(config: AppConfig) -> Tuple[bool, Details]:
        budget = config.budget
        values = {
            "path_budget": budget.path_budget,
            "r_max": budget.r_max,
            "kwl_tuple_limit": budget.kwl_tuple_limit,
            "hom_pattern_max_n": budget.hom_pattern_max_n,
            "hom_host_max_n": budget.hom_host_max_n,
            "iso_max_n": budget.iso_max_n,
            "spasm_max_n": budget.spasm_max_n,
        }
        bad = {key: value for key, value in values.items() if value <= 0}
        return not bad, {key: float(value) for key, value in bad.items()}

    def r_within_bounds(config: AppConfig) -> Tuple[bool, Details]:
        r = config.refinement.r
        return 0 <= r <= config.budget.r_max, {"r": r, "r_max": config.budget.r_max}

    def k_supported(config: AppConfig) -> Tuple[bool, Details]:
        return config.refinement.k >= 2, {"k": config.refinement.k}

    def iterations_non_negative(config: AppConfig) -> Tuple[bool, Details]:
        return config.refinement.max_iters >= 0, {"max_iters": config.refinement.max_iters}

    def variant_known(config: AppConfig) -> Tuple[bool, Details]:
        variant = config.refinement.kwl_variant
        return variant in ("oblivious", "literal"), {"kwl_variant": variant}

    def threads_positive(config: AppConfig) -> Tuple[bool, Details]:
        return config.runtime.threads >= 1, {"threads": config.runtime.threads}

    def format_known(config: AppConfig) -> Tuple[bool, Details]:
        fmt = config.runtime.output_format
        return fmt in ("json", "csv"), {"output_format": fmt}

    def large_k(config: AppConfig) -> Tuple[bool, Details]:
        return config.refinement.k <= 3, {"k": config.refinement.k}

    return [
        _rule("config_budgets_positive", "All size budgets must be positive", positive_budgets),
        _rule("config_r_range", "r must lie in 0..r_max", r_within_bounds),
        _rule("config_k_min", "k-WL needs k >= 2", k_supported),
        _rule("config_max_iters", "max_iters must be non-negative (0 = until stable)", iterations_non_negative),
        _rule("config_kwl_variant", "kwl variant must be 'oblivious' or 'literal'", variant_known),
        _rule("config_threads", "threads must be at least 1", threads_positive),
        _rule("config_output_format", "output format must be 'json' or 'csv'", format_known),
        _warning("config_k_large", "k > 3 is only practical for very small graphs", large_k),
    ]


def register_default_rules(engine: ValidationEngine) -> ValidationEngine:
    engine.register_ruleset(
        RuleSet(
            ruleset_id=RuleSetId.TREE_DECOMPOSITION,
            version="1.0",
            rules=_tree_decomposition_rules(),
            metadata={"source": "tree decomposition axioms"},
        )
    )
    engine.register_ruleset(
        RuleSet(
            ruleset_id=RuleSetId.CONFIG,
            version="1.0",
            rules=_config_rules(),
            metadata={"source": "configuration bounds"},
        )
    )
    return engine


def default_engine() -> ValidationEngine:
    return register_default_rules(ValidationEngine())
