"""Exact q,t-Kostka polynomials for two-part partitions, by creation
operators on modified Schur coordinates and by a statistic on standard
tableaux."""
from .scalar_ring import LaurentQT, parse_qt, format_qt
from .partitions import Partition, conjugate, partitions, syt_count
from .tableaux import Tableau, cocharge, charge, standardize
from .operators import TableauSum, raise0, raise1, lower0, lower1, domino_vector
from .schur import SchurVector, macdonald_j, hall_littlewood_h, u_alg
from .basis_change import characters, xt_to_xtq, xtq_to_xt, varsigma, to_two_row
from .kostka import KostkaTable, kostka_table, kostka_foulkes_oracle, stat, verify_suite

__all__ = [
    "LaurentQT", "parse_qt", "format_qt", "Partition", "conjugate", "partitions", "syt_count",
    "Tableau", "cocharge", "charge", "standardize", "TableauSum", "raise0", "raise1", "lower0",
    "lower1", "domino_vector", "SchurVector", "macdonald_j", "hall_littlewood_h", "u_alg",
    "characters", "xt_to_xtq", "xtq_to_xt", "varsigma", "to_two_row", "KostkaTable",
    "kostka_table", "kostka_foulkes_oracle", "stat", "verify_suite",
]
