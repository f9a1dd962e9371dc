"""The worked example structures, their golden Hasse diagrams, and a random corpus."""

from __future__ import annotations

import random
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .characters import CharSet, enumerate_characters, labels, specialization_poset
from .poset import Poset
from .represent import RSModel, three_ts
from .ts import DegeneratePresentationError, FiniteTS, Presentation, build_from_presentation, from_presentation

PRESENTATIONS: dict[str, tuple[str, tuple[str, ...]]] = {
    "f1": ("x", ()),
    "f1-idem": ("x", ("x^2 = x",)),
    "f2": ("x y z", ("x^2 = y^2", "x^2z^2 = x^2", "y^2z^2 = x^2")),
    "f3": ("x y z", ("x^2 = y^2", "x^2z^2 = x^2", "xz = x")),
    "f4": ("x y z", ("x^2 = y^2", "x^2z^2 = x^2", "xz = x", "z^2 = 1")),
}

NAMES = ("three", "f1", "f1-idem", "f2", "f3", "f4")

# f4 keeps the labels of the larger family it comes from: its characters are h2..h7.
LABEL_START = {"f4": 2}


@lru_cache(maxsize=None)
def by_name(name: str) -> FiniteTS:
    key = name.lower().replace("_", "-")
    if key == "three":
        return three_ts()
    if key not in PRESENTATIONS:
        raise KeyError(f"unknown example {name!r}; choose from {', '.join(NAMES)}")
    gens, rels = PRESENTATIONS[key]
    return from_presentation(gens.split(), rels, name=key)


def three() -> FiniteTS:
    return by_name("three")


def f1() -> FiniteTS:
    return by_name("f1")


def f1_idem() -> FiniteTS:
    return by_name("f1-idem")


def f2() -> FiniteTS:
    return by_name("f2")


def f3() -> FiniteTS:
    return by_name("f3")


def f4() -> FiniteTS:
    return by_name("f4")


@lru_cache(maxsize=None)
def characters_of(name: str) -> CharSet:
    return enumerate_characters(by_name(name))


def character_labels(name: str) -> list[str]:
    return labels(characters_of(name), LABEL_START.get(name, 1))


def spec_poset(name: str) -> Poset:
    return specialization_poset(characters_of(name), character_labels(name))


def cardinality_relation(F: RSModel | FiniteTS) -> bool:
    """card(F) = 2·|X_F| + 1."""
    G = F.ts if isinstance(F, RSModel) else F
    return G.n == 2 * len(enumerate_characters(G)) + 1


# ---------------------------------------------------------------- data files

def data_dir() -> Path:
    return Path(str(resources.files("rsfans") / "data"))


def structure_path(name: str) -> Path:
    return data_dir() / "structures" / f"{name.replace('-', '_')}.ts"


def golden(kind: str, name: str) -> tuple[list[str], set[tuple[str, str]]]:
    """Nodes and Hasse edges transcribed from a reference diagram; kind is 'spec' or 'order'."""
    path = data_dir() / "golden" / f"{kind}_{name.replace('-', '_')}.edges"
    nodes: list[str] = []
    edges: set[tuple[str, str]] = set()
    for line in path.read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("nodes:"):
            nodes = line[len("nodes:"):].split()
        else:
            lo, hi = line.split()
            edges.add((lo, hi))
    return nodes, edges


GOLDEN = {"spec": ("f1", "f1-idem", "f2", "f4"), "order": ("f1", "f1-idem", "f2", "f4")}


# ---------------------------------------------------------------- random corpus

def random_monomial(rng: random.Random, gens: tuple[str, ...]) -> str:
    if rng.random() < 0.08:
        return rng.choice(["1", "-1"])
    parts = [g + ("^2" if rng.random() < 0.5 else "") for g in gens if rng.random() < 0.6]
    body = "".join(parts) or rng.choice(gens)
    return ("-" if rng.random() < 0.2 else "") + body


def random_presentation(rng: random.Random, max_gens: int = 3, max_relations: int = 3) -> Presentation:
    k = rng.randint(1, max_gens)
    gens = tuple("xyz"[:k])
    rels = [f"{random_monomial(rng, gens)} = {random_monomial(rng, gens)}"
            for _ in range(rng.randint(0, max_relations))]
    return Presentation.parse(gens, rels)


def generated_corpus(seed: int = 0, count: int = 40, max_gens: int = 3) -> list[FiniteTS]:
    """Random presented structures (degenerate presentations skipped), deduplicated
    by presentation text, in generation order."""
    rng = random.Random(seed)
    out: list[FiniteTS] = []
    seen = set()
    attempts = 0
    while len(out) < count and attempts < 50 * count:
        attempts += 1
        p = random_presentation(rng, max_gens)
        key = (p.generators, tuple(p.relation_strings()))
        if key in seen:
            continue
        seen.add(key)
        try:
            G = build_from_presentation(p, name=f"rand{len(out)}")
        except DegeneratePresentationError:
            continue
        out.append(G)
    return out


def example_corpus() -> list[FiniteTS]:
    return [by_name(n) for n in NAMES]
