"""
Theorem registry for the oracle.

Implements the TheoremABC pattern with automatic registration via metaclass.
Every concrete theorem class is instantiated once and stored under its name;
sweeps look theorems up by that name, also inside worker processes.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from math import factorial
from typing import Any, Dict, Iterable, List, Optional, Tuple

from schubert_complexity.exceptions import SchubertError, UnknownTheoremError
from schubert_complexity.perm_core import permutations_between

logger = logging.getLogger(__name__)

# Global theorem registry
_REGISTRY: Dict[str, "TheoremABC"] = {}

Counterexample = Dict[str, Any]


class TheoremMeta(type(ABC)):  # type: ignore[misc]
    """Metaclass for automatic theorem registration, compatible with ABC."""

    def __new__(mcls, name, bases, attrs):  # type: ignore[no-untyped-def]
        cls = super().__new__(mcls, name, bases, attrs)

        # Only register concrete theorems (not the abstract base)
        if (
            not attrs.get("abstract", False)
            and hasattr(cls, "name")
            and not cls.__abstractmethods__
        ):
            _REGISTRY[cls.name] = cls()

        return cls


class TheoremABC(ABC, metaclass=TheoremMeta):
    """
    Abstract base class for exhaustive checks.

    Each theorem defines:
    - name: registry id used on the command line
    - description: the statement being checked
    - scale: which n_max applies ("single", "pair" or "interval")
    - check: returns None when an item passes, a counterexample otherwise

    By default the items are the permutations of S_n in lexicographic
    order, so a sweep can hand out rank blocks to workers.
    """

    abstract = True  # Keeps ABC itself out of registry

    name: str
    description: str
    scale: str = "single"
    min_n: int = 1

    def n_values(self, n_max: int) -> Iterable[int]:
        return range(self.min_n, n_max + 1)

    def size(self, n: int) -> int:
        return factorial(n)

    def items(self, n: int, start: int, stop: int) -> Iterable[Any]:
        return permutations_between(n, start, stop)

    def check_block(
        self, n: int, start: int, stop: int, options: Dict[str, Any]
    ) -> Tuple[int, Optional[Counterexample]]:
        """
        Check items [start, stop) of size n.

        Returns:
            (items checked, first counterexample or None)
        """
        checked = 0
        for item in self.items(n, start, stop):
            checked += 1
            try:
                failure = self.check(item, options)
            except SchubertError as e:
                failure = {"item": str(item), "error": f"{type(e).__name__}: {e}"}
            if failure is not None:
                failure.setdefault("n", n)
                return checked, failure
        return checked, None

    @abstractmethod
    def check(self, item: Any, options: Dict[str, Any]) -> Optional[Counterexample]:
        """Check one item."""


@dataclass
class TheoremResult:
    theorem_id: str
    n_max: int
    checked: int = 0
    passed: bool = True
    counterexample: Optional[Counterexample] = None
    seconds: float = 0.0
    report_path: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "theorem_id": self.theorem_id,
            "n_max": self.n_max,
            "checked": self.checked,
            "passed": self.passed,
            "counterexample": self.counterexample,
            "seconds": round(self.seconds, 3),
            "report_path": self.report_path,
        }


def get_all_theorems() -> Dict[str, "TheoremABC"]:
    """Get all registered theorems."""
    return _REGISTRY.copy()


def get_theorem(name: str) -> "TheoremABC":
    """Get a specific theorem by name."""
    if name not in _REGISTRY:
        raise UnknownTheoremError(
            f"Theorem '{name}' not found. Available theorems: {list(_REGISTRY.keys())}"
        )
    return _REGISTRY[name]


def list_theorem_names() -> List[str]:
    """Get list of all available theorem ids."""
    return list(_REGISTRY.keys())


def get_theorem_descriptions() -> Dict[str, Dict[str, str]]:
    return {
        name: {"name": theorem.name, "description": theorem.description, "scale": theorem.scale}
        for name, theorem in _REGISTRY.items()
    }
