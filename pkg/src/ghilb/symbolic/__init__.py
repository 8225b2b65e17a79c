from .scalars import (Cyclotomic, OMEGA, OMEGA2, Rational, SQRT_MINUS_THREE,
                      Scalar, conjugate_scalar, scalar_inverse, scalar_str)
from .poly import (BlockOrder, GRLEX, GrLex, LEX, Lex, Poly, Ring,
                   exp_div, exp_divides, exp_lcm, exp_mul)
from .groebner import (DEFAULT_MAX_SPAIRS, GroebnerBudgetExceeded, colength,
                       groebner_basis, ideal_contains, interreduce,
                       normal_form, s_polynomial, standard_monomials)
from .calculus import (derivative, det, jacobian_determinant, rank,
                       rational_partial, solve_combination)

__all__ = [
    "Cyclotomic", "OMEGA", "OMEGA2", "Rational", "SQRT_MINUS_THREE",
    "Scalar", "conjugate_scalar", "scalar_inverse", "scalar_str",
    "BlockOrder", "GRLEX", "GrLex", "LEX", "Lex", "Poly", "Ring",
    "exp_div", "exp_divides", "exp_lcm", "exp_mul",
    "DEFAULT_MAX_SPAIRS", "GroebnerBudgetExceeded", "colength",
    "groebner_basis", "ideal_contains", "interreduce", "normal_form",
    "s_polynomial", "standard_monomials",
    "derivative", "det", "jacobian_determinant", "rank",
    "rational_partial", "solve_combination",
]
