"""Constructing singular cyclic words with the arithmetic descent.

The constructor strips |delta_b| occurrences of the least feasible letter
at a time; when the leftover vector is a power of one letter it rebuilds
the word by unwinding the insertion maps from that constant seed.  The
descent can also fail, in which case singular words (if any) are found by
brute force.  On two letters everything collapses to Christoffel words.
"""

from cycont import (
    alphabet_of_size,
    christoffel,
    classify,
    construct_singular,
    delta_profile,
    enumerate_class,
    is_balanced,
    is_singular,
    midpoint_case,
    xi_cyclic,
    xi_preimage,
)

abcd = alphabet_of_size(4)

vector = abcd.vector((3, 3, 4, 2))
print("vector", vector.counts, "delta profile", delta_profile(vector))
print("midpoint case:", midpoint_case(vector))

outcome, trace = construct_singular(vector)
print("\ndescent:")
print("  start   ", trace.start.counts)
for step in trace.steps:
    print(f"  -{step.delta} x {step.letter} ->", step.vector.counts)
print("unwinding the insertion maps from the seed:")
print(" ", " -> ".join(str(w) for w in trace.words))
print("output:", outcome, "| singular:", is_singular(outcome),
      "| palindromic class:", outcome == outcome.reverse())

print("\none insertion map step, and its inverse:")
step = xi_cyclic("b", abcd.cyclic("accccadad"))
print("  xi_b(accccadad) =", step)
print("  preimage:", xi_preimage("b", step))

failing = abcd.vector((3, 2, 4, 3))
outcome, trace = construct_singular(failing)
print("\nvector", failing.counts, "->",
      "FAILURE" if outcome is None else outcome)
print("  chain:", [s.vector.counts for s in trace.steps])
brute = [str(w) for w in enumerate_class(failing) if classify(w).in_S]
print("  brute-force singular words:", brute)

print("\nbinary case: singular == balanced == Christoffel")
for p, q in ((2, 1), (2, 2), (4, 3), (5, 3)):
    w = christoffel(p, q)
    print(f"  C({p},{q}) = {w}  balanced={is_balanced(w)} singular={is_singular(w)}")
