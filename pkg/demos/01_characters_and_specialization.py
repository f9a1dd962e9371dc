"""Walk through the smallest nontrivial structure: elements, characters, and
how characters specialize to one another."""

from rsfans import examples as ex
from rsfans.characters import zero_set

G = ex.f1()
print(f"{G.name} has {G.n} elements: {' '.join(G.names)}")

X = ex.characters_of("f1")
for label, h in zip(ex.character_labels("f1"), X):
    values = ", ".join(f"{G.names[i]}->{v}" for i, v in enumerate(h) if i >= 3)
    print(f"  {label}: {values}   zero-set {{{', '.join(G.names_of(sorted(zero_set(h))))}}}")

P = ex.spec_poset("f1")
print("specialization (lower one specializes to upper one):")
for lo, hi in P.hasse_names():
    print(f"  {lo} ~> {hi}")
