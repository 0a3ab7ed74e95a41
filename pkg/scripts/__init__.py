"""
Utility scripts for Schubert Complexity.

This package contains scripts for:
- Running the theorem oracle with a summary table
- Printing the worked examples
"""
