"""
Permutation statistics and dashed patterns
==========================================

Descents, the major index and the inversion number, then the statistic
``stat`` built from four dashed patterns.
"""

from permstat import Permutation, count_occurrences, maj_via_patterns, stat_vector

pi = Permutation.parse("13287546")
print("statistics of", pi, stat_vector(pi))

# Letters with no dash between them must sit next to each other.
# In b-ca the "ca" pair is a descent, and b lies strictly between its values.
print("(b-ca) in 4753162 =", count_occurrences("b-ca", (4, 7, 5, 3, 1, 6, 2)))

# maj has a pattern expression too, and both routes agree
print("maj via patterns:", maj_via_patterns(pi.letters))

# The anchors ^ and $ pin an occurrence to the ends of the permutation.
for text in ("cb-a", "^cb-a", "!cb-a"):
    print(f"({text}) in 978452613 =", count_occurrences(text, (9, 7, 8, 4, 5, 2, 6, 1, 3)))
