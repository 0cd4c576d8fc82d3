# apolar.lab
# Apolar algebras, structure tensors, subset convolution, Clifford and Waring checks.
