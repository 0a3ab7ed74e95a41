"""
Exhaustive theorem oracle.

Auto-discovers and exposes all theorems via the TheoremABC registry.
Import this module to register every available check.
"""

from schubert_complexity.oracle.base import (
    TheoremResult,
    get_all_theorems,
    get_theorem,
    get_theorem_descriptions,
    list_theorem_names,
)

# Import theorem modules to trigger auto-registration
try:
    from schubert_complexity.oracle import theorems
except ImportError:
    pass

from schubert_complexity.oracle.sweep import run_verification, verify, verify_all

__all__ = [
    "TheoremResult",
    "get_all_theorems",
    "get_theorem",
    "get_theorem_descriptions",
    "list_theorem_names",
    "run_verification",
    "verify",
    "verify_all",
]
