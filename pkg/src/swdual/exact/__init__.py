"""Exact arithmetic: integer matrices, cyclotomics, symmetric functions, F_p algebra."""
from .intmat import (IntMatrix, SingularMatrix, det, hermite_normal_form, identity,
                     invariant_factors, matmul, smith_normal_form, solve_rational)
from .cyclotomic import Cyclo, cyclotomic_poly
from .symfun import (MPoly, NotSymmetric, elementary, expand_in_t, newton_eval,
                     newton_s_k, power_sum, sym_to_elementary)
from .fp import Echelon, nullspace, rank
