"""The exchange graph: a DAG whose sinks are the singular words.

Every non-synchronizing factorization uv of a cyclic word yields a move to
the class of u*v, which strictly increases the cyclic semi-regular
continuant.  Directing all moves this way over a reversal-identified
Abelian class gives an acyclic graph: one source (the word all of whose
factorizations are non-synchronizing) and, in general, several sinks.
"""

from cycont import SyncKind, alphabet_of_size, build_exchange_graph, cyclic_semiregular

alphabet = alphabet_of_size(3, values=(2, 3, 4))
vector = alphabet.vector((2, 2, 2))
graph = build_exchange_graph(vector, SyncKind.PLAIN)

print("plain exchange graph of the class", vector.counts, "over a<b<c")
print("vertices (reversal-identified):", len(graph.vertices))
print("acyclic:", graph.is_acyclic())
print("source(s):", [str(v) for v in graph.sources()])
print("sink(s):  ", [str(v) for v in graph.sinks()])

print("\nedges, annotated with the value climb:")
for v in graph.vertices:
    for t in graph.successors(v):
        print(f"  {v} ({cyclic_semiregular(v)}) -> {t} ({cyclic_semiregular(t)})")

print("\ntopological order:")
print(" ", " -> ".join(str(v) for v in graph.topological_order()))

print("\nDOT, ready for graphviz:")
print(f"digraph exchange {{")
for v in graph.vertices:
    for t in graph.successors(v):
        print(f'  "{v}" -> "{t}";')
print("}")
