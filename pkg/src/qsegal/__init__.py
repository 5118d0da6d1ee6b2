"""q-deformed Segal-Bargmann toolkit.

Numerical and symbolic machinery for the q-deformed Segal-Bargmann
transform: crossing combinatorics, the q-Gaussian measure and its Hermite
polynomials, Wick calculus of jointly q-Gaussian families, mixed Q-Fock
spaces, and desk-scale Monte Carlo reproductions of the random-matrix and
mixture central-limit approximation theorems.
"""

__version__ = "0.1.0"
