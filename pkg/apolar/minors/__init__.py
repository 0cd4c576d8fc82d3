# apolar.minors
# General engine: derivatives tracked on the span of all minors of X.
