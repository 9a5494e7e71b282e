"""
ZKScout - Series Modules

polynomial  integer polynomials in t (exact, arbitrary size)
rational    rational functions with denominator(0) = 1 and their expansions
growth      exponential / sub-exponential verdicts from the poles
spaces      Hilbert-Poincare series of Z_K, its loop spaces, DJ(K) and friends
"""
