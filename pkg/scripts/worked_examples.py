#!/usr/bin/env python3
"""
Print the worked examples: one matrix Schubert variety, one toric hook
permutation and one Kazhdan-Lusztig pair, with pictures and generators.
"""

import logging
import os
import sys

# Add the project root to Python path
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..'))

from schubert_complexity import kl_variety, matrix_schubert, statmodel
from schubert_complexity.config import LOG_FORMAT
from schubert_complexity.diagram import render_ascii
from schubert_complexity.perm_core import parse

logging.basicConfig(level=logging.WARNING, format=LOG_FORMAT)


def print_section(title: str) -> None:
    print("\n" + "=" * 60)
    print(title)
    print("=" * 60)


def show_matrix_schubert(word: str) -> None:
    w = parse(word)
    report = matrix_schubert.analyze(w, sym_low=True)
    print_section(f"MATRIX SCHUBERT Y_{w}")
    print(render_ascii(w))
    print()
    print(f"dim X = {report.dim_x}, dim Y = {report.dim_y}, dim sigma = {report.dim_sigma}")
    print(f"complexity = {report.complexity}, toric = {report.toric}")
    if report.sym_low is not None:
        print(f"symmetric complexity = {report.sym_low.complexity}")
    if report.toric:
        for model in statmodel.qi_from_toric(w):
            print(f"QI model [{model.m}] x [{model.n}], rational MLE = {statmodel.rational_mle(model)}")


def show_kl_pair(v_word: str, w_word: str) -> None:
    v, w = parse(v_word), parse(w_word)
    report = kl_variety.analyze(v, w, with_generators=True)
    print_section(f"KAZHDAN-LUSZTIG N_{v},{w}")
    print(f"dim N = {report.dim_n}, dim sigma = {report.dim_sigma}, complexity = {report.complexity}")
    print(f"unexpected zeros: {sorted(report.unexpected_zeros)}")
    print(f"G_vw edges: {report.graph.edges}")
    for p in report.generators or []:
        print(f"  {p}")


def main() -> None:
    show_matrix_schubert("45231")
    show_matrix_schubert("251346")
    show_kl_pair("43125", "53412")


if __name__ == "__main__":
    main()
