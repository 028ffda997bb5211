"""detlab: exact verification of determinant identities.

Exact scalars (int, Fraction, :class:`QPoly`, :class:`MultiLaurent`), a
registry of matrix families, several determinant engines, closed-form
evaluators, constant-term and moment-integral routines, a product-formula
guesser and a batch verifier.
"""

from .closed_forms import box_product, calibrate_mrr, rhs, rhs_cross_check
from .ct_integral import dyson_ct, moment_integral, selberg_like, v2_coefficient, v2_coefficient_check
from .determinants import det, det_bareiss, det_condensation, det_laplace, dodgson_residual, triangular_factor_det
from .exact import QPoly, binomial, pochhammer, q_binomial, q_int, superfactorial
from .families import ExactMatrix, build, list_identities, lookup
from .guesser import NoFit, ProductFormula, guess_product_form, roundness
from .laurent import MultiLaurent, ct, ct_all, vandermonde
from .verify import Config, verify, verify_all

__version__ = "0.1.0"
