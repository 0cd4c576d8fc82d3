# apolar.circuits
# Skew circuits: model, text format, expansion, builders and operator evaluation.
