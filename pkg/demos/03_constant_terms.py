"""Constant terms and moment integrals by brute-force Laurent expansion.

Run:  python3 demos/03_constant_terms.py
"""
from math import factorial

from detlab import det_bareiss, dyson_ct, selberg_like, superfactorial, v2_coefficient, vandermonde

print("Dyson, alpha = 1 (expect n!):", [dyson_ct(n, 1) for n in range(1, 6)])
print("Dyson, alpha = 2 (expect (2n)!/2^n):", [dyson_ct(n, 2) for n in range(1, 5)])

print("\nV(x)^2 for n = 2:", vandermonde(2) ** 2)
print("coefficient of X^(n-1) in V^2:", [v2_coefficient(n) for n in range(1, 7)])

# Three routes to one number: expand V^2 and integrate monomials against
# e^(-x), multiply superfactorials, or take a Hankel determinant of factorials.
for n in range(1, 5):
    hankel = det_bareiss([[factorial(i + j) for j in range(n)] for i in range(n)])
    print(f"n={n}: integral {selberg_like(n, 0, 1)}, "
          f"superfactorials {superfactorial(n) * superfactorial(n - 1)}, n! det[(i+j)!] {factorial(n) * hankel}")
