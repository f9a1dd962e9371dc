"""Build the closed-form fan on each worked example and look at its
representation order: bounds, modularity and a pentagon when there is one."""

from rsfans import examples as ex
from rsfans.fan import make_fan
from rsfans.order import chain_length, chain_length_bound, fan_lattice
from rsfans.represent import check_rs_axioms

for name in ex.NAMES:
    F = make_fan(ex.by_name(name))
    rs_ok = check_rs_axioms(F).ok
    lat = fan_lattice(F)
    G = F.ts
    line = (f"{name:8s} |G|={G.n:<3d} RS axioms {'ok' if rs_ok else 'FAIL'}; "
            f"modular={lat.modular} distributive={lat.distributive}")
    if lat.pentagon:
        line += f"; pentagon {lat.pentagon}"
    print(line)
    print(f"         chain length {chain_length(G, ex.characters_of(name))} (bound {chain_length_bound(G)})")
