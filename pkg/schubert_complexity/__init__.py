"""
Schubert Complexity - torus-action complexity of matrix Schubert and
Kazhdan-Lusztig varieties.

This package provides:
- Permutations, Bruhat order, intervals and maximal chains
- Diagrams, essential sets and hook decompositions
- Weight-cone graphs, cone dimensions and complexity
- Toricity witnesses and the reflection classification
- Conditional independence and quasi-independence models
- An exhaustive oracle that re-checks every statement on small S_n
"""

__version__ = "0.1.0"
__author__ = "Schubert Complexity Development Team"
