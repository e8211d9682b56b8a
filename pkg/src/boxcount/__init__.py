"""Exact counts of identical objects distributed over capped boxes, in a row or on a circle."""

from .arith import (DomainError, RangeError, binomial, divisors, euler_totient, gcd_tuple,
                    multinomial)
from .circular import (ComparisonGrid, ComparisonReport, build_comparison_report,
                       circular_excess, count_circular, count_circular_burnside,
                       count_two_kinds_circular_burnside, count_two_kinds_circular_groups_paper,
                       count_two_kinds_circular_paper, count_two_kinds_circular_restricted_paper,
                       necklace_multinomial)
from .diagram import (Diagram, count_linear_diagram, first_row_with_cap, generate_diagram,
                      iter_rows, multiplicities, occupied_boxes, row_permutations)
from .linear import (BoxGroupSpec, count_groups_gf, count_linear_incexc, count_single_kind_groups,
                     count_three_kinds_restricted, count_two_kinds_groups,
                     count_two_kinds_restricted, count_unrestricted, gf_coefficient)
from .oracle import ResourceError, oracle_circular, oracle_linear, oracle_list
from .twokinds import count_two_kinds_linear, splits_count

__version__ = "0.1.0"
