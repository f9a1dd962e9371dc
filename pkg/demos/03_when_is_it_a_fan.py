"""Real semigroups induced by subsets of the character space: some are fans,
most are not, and the three characterization conditions tell them apart."""

import itertools

from rsfans import examples as ex
from rsfans.charfan import check_characterization
from rsfans.represent import check_rs_axioms, induce_D

name = "f4"
G = ex.by_name(name)
X = ex.characters_of(name)
labels = ex.character_labels(name)

for r in range(len(X), 0, -1):
    for idx in itertools.combinations(range(len(X)), r):
        M = induce_D(G, [X[i] for i in idx])
        rep = check_rs_axioms(M)
        if not rep.ok:
            continue
        c = check_characterization(M, X)
        chosen = ",".join(labels[i] for i in idx)
        print(f"{{{chosen}}}: fan={c.is_fan} (2i={c.cond_2i}, 2ii={c.cond_2ii}, 2iii={c.cond_2iii})")
