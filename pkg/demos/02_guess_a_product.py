"""From determinants to a conjectured product formula.

Compute a few terms of K_n (sum of C(2i,k) C(2j,k) 2^k), check that they
factor into small primes, fit a hypergeometric product and compare the
extrapolation with fresh determinants.

Run:  python3 demos/02_guess_a_product.py
"""
from detlab import build, det_bareiss, guess_product_form, rhs, roundness

seq = [det_bareiss(build("I11", n)) for n in range(1, 9)]
print("K_n, n = 1..8:", seq)

report = roundness(seq, 50)
print("largest prime factors:", report.largest_prime, "round" if report.round else "not round")

formula = guess_product_form(seq)
print(formula.describe())
print(formula.to_line())

for n in (9, 10, 11):
    predicted = formula(n)
    actual = det_bareiss(build("I11", n))
    print(f"n={n}: predicted {predicted}, determinant {actual}, closed form {rhs('I11', n)}")

# A sequence without a hypergeometric product is rejected, not forced.
print(guess_product_form([1, 1, 2, 3, 5, 8, 13, 21, 34, 55]))
