# apolar.shared
# Errors, configuration, tracing, scalars and the exact linear algebra every engine leans on.
