"""
Insertion labelings and code tables
===================================

Build a permutation by inserting n = 2, 3, ... one at a time. Each scheme
labels the gaps so that the label equals the growth of its statistic.
"""

from permstat import code_of, code_trace, decode, insert, make_labeling

sigma = "13287546"
for scheme in ("inv", "maj", "stat"):
    print(f"{scheme:>4}-labeling:", make_labeling(scheme, sigma))

print()
print("insert 9 at label 3 (maj):", insert("maj", 3, sigma))

# Peel off the maximum repeatedly to read the major index table.
print()
print("i  restriction to 1..i-1 (labelled)  m_i")
for row in code_trace("maj", sigma):
    print(f"{row.i}  {row.previous.render():<34} {row.digit}")
word = code_of("maj", sigma)
print("major index table:", word, "  digit sum:", sum(word))
print("decoded back:", decode("maj", word))
