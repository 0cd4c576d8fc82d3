# apolar.detection
# Cycle, path, square-free, SING and matroid decisions plus their brute-force oracles.
