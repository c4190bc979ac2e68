"""Shared oracles and generators for the test suite.

The oracles here are deliberately independent of the package's own
algorithms: word-level union-find over the defining relations, breadth-first
length tables over atom words, and exhaustive divisor searches on Coxeter
carriers.  They are slow and only run at desk scale.
"""

from __future__ import annotations

import random

from garside.coxeter import ArtinSystem
from garside.garside import GroupElement


def rand_word(system: ArtinSystem, rng: random.Random, length: int, signed: bool = True):
    letters = list(system.atoms)
    if signed:
        letters = letters + [-a for a in system.atoms]
    return [rng.choice(letters) for _ in range(length)]


def rand_element(system: ArtinSystem, rng: random.Random, length: int = 10) -> GroupElement:
    return GroupElement.from_word(system, rand_word(system, rng, rng.randrange(length + 1)))


def rand_positive(system: ArtinSystem, rng: random.Random, length: int = 8) -> GroupElement:
    return GroupElement.from_word(
        system, rand_word(system, rng, rng.randrange(length + 1), signed=False)
    )


def rand_supported_positive(
    system: ArtinSystem, rng: random.Random, X, extra: int = 4
) -> GroupElement:
    """A positive element whose support is exactly X."""
    letters = sorted(X)
    rng.shuffle(letters)
    letters += [rng.choice(sorted(X)) for _ in range(rng.randrange(extra + 1))]
    return GroupElement.from_word(system, letters)


def rand_positive_conjugator(
    system: ArtinSystem, rng: random.Random, u: GroupElement, steps: int = 4
) -> GroupElement:
    """A random x with x^{-1} u x positive, built from atoms that conjugate
    positively and left ribbons (optionally shifted by a Delta power)."""
    from garside.parabolic import ribbon, support

    k = rng.choice((0, 0, 0, 1, 2, -2))
    x = GroupElement.delta_power(system, k)
    v = u.tau(k)
    for _ in range(rng.randrange(steps + 1)):
        X = support(v)
        options = []
        for s in sorted(X):
            c = GroupElement.atom(system, s)
            if (c.inv() * v * c).is_positive:
                options.append(c)
        for t in sorted(set(system.atoms) - X):
            options.append(ribbon(system, X, t, side="left").value)
        if not options:
            break
        c = rng.choice(options)
        x = x * c
        v = c.inv() * v * c
    assert (x.inv() * u * x).is_positive
    return x


def rand_normalizer(system: ArtinSystem, rng: random.Random, X, steps: int = 4) -> GroupElement:
    """A random element normalizing A_X: products of A_X elements, central
    Delta powers, and ribbons whose target is X again."""
    from garside.parabolic import ribbon, sub_delta

    X = frozenset(X)
    returning = [
        ribbon(system, X, t, side="left").value
        for t in sorted(set(system.atoms) - X)
        if ribbon(system, X, t, side="left").target == X
    ]
    out = GroupElement.identity(system)
    for _ in range(rng.randrange(1, steps + 1)):
        kind = rng.randrange(3 if returning else 2)
        if kind == 0:
            word = [rng.choice(sorted(X)) * rng.choice((1, -1)) for _ in range(rng.randrange(4))]
            out = out * GroupElement.from_word(system, word)
            if rng.random() < 0.3:
                out = out * sub_delta(system, X) ** rng.choice((-1, 1))
        elif kind == 1:
            out = out * GroupElement.delta_power(system, rng.choice((-2, 2)))
        else:
            out = out * rng.choice(returning)
    return out


# ---------------------------------------------------------------------------
# Word-level oracle: positive words up to the defining relations.


def relation_moves(system: ArtinSystem, word: tuple[int, ...]):
    """All words obtained by one application of a defining relation."""
    out = []
    n = len(word)
    for s in system.atoms:
        for t in system.atoms:
            if s >= t:
                continue
            m = system.matrix.entry(s, t)
            lhs = tuple((s, t)[i % 2] for i in range(m))
            rhs = tuple((t, s)[i % 2] for i in range(m))
            for i in range(n - m + 1):
                if word[i : i + m] == lhs:
                    out.append(word[:i] + rhs + word[i + m :])
                if word[i : i + m] == rhs:
                    out.append(word[:i] + lhs + word[i + m :])
    return out


def relation_closure_classes(system: ArtinSystem, length: int):
    """Partition of all positive words of the given length into equality
    classes of the monoid (relations preserve length, so each length is
    self-contained).  Returns {word: class id}."""
    words = [()]
    for _ in range(length):
        words = [w + (a,) for w in words for a in system.atoms]
    parent = {w: w for w in words}

    def find(w):
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    for w in words:
        for v in relation_moves(system, w):
            ra, rb = find(w), find(v)
            if ra != rb:
                parent[ra] = rb
    return {w: find(w) for w in words}


# ---------------------------------------------------------------------------
# Brute-force length/descent table over atom words.


def bfs_length_table(system: ArtinSystem):
    """{carrier: length} for the whole group, by BFS over atom words."""
    dist = {system.identity: 0}
    frontier = [system.identity]
    while frontier:
        nxt = []
        for w in frontier:
            for s in system.atoms:
                u = w * system.reflection(s)
                if u not in dist:
                    dist[u] = dist[w] + 1
                    nxt.append(u)
        frontier = nxt
    return dist


def brute_prefix_divisors(system: ArtinSystem, w):
    """All u with length(u) + length(u^{-1} w) = length(w)."""
    return [u for u in system.all_elements() if u.length + (u.inverse * w).length == w.length]


def brute_prefix_join(system: ArtinSystem, a, b):
    """Minimal common right multiple in the prefix order; asserts uniqueness."""
    best = None
    for j in system.all_elements():
        if a.length + (a.inverse * j).length == j.length and (
            b.length + (b.inverse * j).length == j.length
        ):
            if best is None or j.length < best.length:
                best = j
    candidates = [
        j
        for j in system.all_elements()
        if j.length == best.length
        and a.length + (a.inverse * j).length == j.length
        and b.length + (b.inverse * j).length == j.length
    ]
    assert len(candidates) == 1
    return candidates[0]


def cayley_distances(system: ArtinSystem, radius: int, budget: int = 500_000):
    """Graph distances from the identity over the Garside generators and
    their inverses, out to the given radius."""
    gens = [
        GroupElement.lift(w) for w in system.all_elements() if not w.is_identity
    ]
    gens += [g.inv() for g in gens]
    dist = {GroupElement.identity(system): 0}
    frontier = [GroupElement.identity(system)]
    for d in range(1, radius + 1):
        nxt = []
        for g in frontier:
            for h in gens:
                out = g * h
                if out not in dist:
                    dist[out] = d
                    nxt.append(out)
                    assert len(dist) <= budget
        frontier = nxt
    return dist
