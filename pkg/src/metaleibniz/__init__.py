"""Exact computation in the free metabelian Leibniz algebra ``L_n``.

Normal forms, symmetric polynomials and inner automorphisms, with exact
rational arithmetic throughout.
"""

from .element import (
    LeibnizElement,
    a_elem,
    b_elem,
    bracket,
    degree_component,
    elem_act,
    generator,
    quad_basis,
    right_act,
)
from .expr import normalize
from .invariants import (
    SymmetricData,
    decompose_symmetric,
    invariant_basis_oracle,
    is_symmetric,
    symmetrize,
    synthesize,
    theorem_A_check,
    theorem_B_check,
)
from .kernels import BACKEND
from .maps import (
    InnerAuto,
    ann_constructor,
    decompose_preserving,
    inner_apply,
    inner_compose,
    inner_inverse,
    inner_make,
    is_in_annihilator,
    preserves_symmetric,
)
from .parser import parse, parse_element, parse_poly
from .poly import (
    CommPoly,
    Permutation,
    is_fixed_by,
    poly_act,
    stabilizer_generators,
    symmetric_generator,
)
from .render import render

__version__ = "0.1.0"
