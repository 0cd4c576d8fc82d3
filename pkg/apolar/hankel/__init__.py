# apolar.hankel
# Hankel engine: derivatives tracked on maximal minors of C_d via straightening.
