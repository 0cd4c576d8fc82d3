# apolar.algebra
# Sparse polynomials, the apolar inner product and the brute-force reference operations.
