"""
Counting the classes without touching S_n
=========================================

Two permutations are equivalent when sigma^k a = b sigma^l for some
exponents k, l. The number of classes comes out of a recursion over the
divisors of n -- every division in it is exact, which is itself a
nontrivial check that the recursion is the right one. All arithmetic is
plain Python integers, so nothing overflows and nothing rounds.
"""

from math import factorial

from cycleq.counting import (
    count_table,
    predicted_size_histogram,
    q_count,
    q_prime,
    wilson_check,
)

# --- the tally matrix for one n ------------------------------------------
# One column per divisor k of n: how many classes sit at minimal left
# exponent k (h), how many exponent families carry them (phi), and the
# product. The column sums give the class count.

print(count_table(12).to_text())
print()

# --- the sequence ---------------------------------------------------------

print(" n  classes")
for n in range(2, 20):
    print("%2d  %d" % (n, q_count(n)))
print()

# Class sizes are k*n for k a proper divisor, or n^2; multiplicities are
# readable off the same matrix. The histogram must add up to n! exactly.
n = 6
hist = predicted_size_histogram(n)
print("predicted class sizes for n=%d:" % n, hist)
print("weighted sum = %d = %d! is %s"
      % (sum(s * m for s, m in hist.items()), n,
         sum(s * m for s, m in hist.items()) == factorial(n)))
print()

# --- primes collapse to a closed form --------------------------------------
# For prime p the whole recursion reduces to ((p-1)! + (p-1)^2) / p.  The
# division being exact is Wilson's theorem in disguise; running the same
# quotient test for composite n gives a (terrible, but correct) primality
# test.

for p in (5, 7, 11, 13):
    print("q_prime(%2d) = %-8d  q_count(%2d) = %d" % (p, q_prime(p), p, q_count(p)))
print()

print("wilson_check as a primality test on 2..30:")
print("  primes:", [n for n in range(2, 31) if wilson_check(n)])
