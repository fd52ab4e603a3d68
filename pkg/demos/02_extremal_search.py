"""Extremal arrangements over a cyclic Abelian class, exhaustively.

Reproduces the five-letter showcase: the same three cyclic words trade
places as the maximizer of the cyclic semi-regular continuant when the
digit values change, and for one value set the maximum is a genuine tie.
Every optimizer carries a synchronization-class certificate.
"""

from cycont import alphabet_of_size, cyclic_semiregular, search

alphabet = alphabet_of_size(5, values=(2, 3, 4, 5, 6))
vector = alphabet.vector((1, 2, 2, 2, 1))

print("class of Parikh vector", vector.counts, "over a<b<c<d<e")

for values in ((2, 3, 4, 5, 6), (2, 3, 4, 10, 11), (2, 3, 4, 9, 10)):
    report = search(vector, values=values, valuation="semiregular",
                    direction="max")
    print(f"\nvalues {values}: maximum Kd_cyc = {report.value} "
          f"over {report.class_size} cyclic words")
    for word, cert in zip(report.optima, report.certificates):
        print(f"  optimum {word}  singular={cert.in_S}")
    print("  unique up to reversal:", report.unique_up_to_reversal)

print("\nthe three contenders under each value set:")
for name in ("bccdbdae", "bdbccdae", "bcdbcdae"):
    w = alphabet.cyclic(name)
    row = [cyclic_semiregular(w, v)
           for v in ((2, 3, 4, 5, 6), (2, 3, 4, 10, 11), (2, 3, 4, 9, 10))]
    print(f"  {name}: {row}")

report = search(vector, valuation="regular", direction="min")
print("\nminimum K_cyc =", report.value,
      "attained by", [str(w) for w in report.optima],
      "(alt-singular:", report.certificates[0].in_S_alt, ")")
