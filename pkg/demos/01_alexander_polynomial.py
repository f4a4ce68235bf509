"""
Alexander polynomials from presentation matrices
=================================================

A C-complex for a 2-component link gives a square presentation matrix of
its Alexander module over Z[t1^{+-1}, t2^{+-1}]. The determinant is the
multivariable Alexander polynomial, up to units +-t1^a t2^b.
"""

from concordium import fixtures
from concordium.laurent import T1, T2, equal_up_to_units, eval_at_ones, invert_variables, is_unit
from concordium.polymatrix import PolyMatrix, alexander_polynomial, det, is_alexander_trivial

# The 4x4 matrix for the link (Q, eta(Q)), loaded from the shipped fixture.
A = fixtures.matrix_A()
print(A)

# Its determinant is a monomial, hence a unit: the module is trivial.
print("det(A)       =", det(A))
print("normalized   =", alexander_polynomial(A))
print("trivial      =", is_alexander_trivial(A))

# Matrices can also be built directly from ring elements.
B = PolyMatrix([[T1 - 1, 0], [0, T2 - 1]])
print("det(B)       =", det(B), "->", alexander_polynomial(B))

# The polynomial of the Wh2 variant is not a unit, which obstructs
# topological concordance to the Hopf link.
wh2 = fixtures.wh2_poly()
print("Wh2          =", wh2)
print("unit?        =", is_unit(wh2))
print("value at 1,1 =", eval_at_ones(wh2))
print("symmetric    =", equal_up_to_units(invert_variables(wh2), wh2))
