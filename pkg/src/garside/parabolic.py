"""Standard parabolic subgroups, ribbons, and conjugator factorization.

A_X is the subgroup generated by an atom subset X.  Its Garside element
Delta_X is the lcm of X; conjugation by Delta_X permutes the atoms of X.
Ribbons connect nested parabolics:

    r_{X,t} = Delta_{X u t} Delta_X^{-1}   (right ribbon)
    r_{t,X} = Delta_X^{-1} Delta_{X u t}   (left ribbon)

and conjugation by either transports the atom set X to a set Y inside
X u {t}.  Minimal positive conjugators of an X-supported positive element
are either atoms of X or left ribbons, which yields the factorization
x = alpha * beta of any positive conjugator into a part alpha inside A_X
followed by a chain of left ribbons beta.

Membership in A_X is decided through the unique reduced left fraction
g = a^{-1} b over the positive monoid: g lies in A_X exactly when both parts
have support inside X.  Normal forms inside A_X (including reducible X,
where A_X is a direct product over the connected components of X) are
computed in the component subsystems and recombined with a shared Delta_X
exponent.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .coxeter import ArtinSystem, CoxeterElement, CoxeterMatrix, classify_with_map, parse_system
from .errors import (
    MembershipError,
    NoConjugatorError,
    NotPositiveError,
    PreconditionError,
    UnknownSystemError,
)
from .garside import GroupElement, prefix_join


def _check_atoms(system: ArtinSystem, X) -> frozenset[int]:
    X = frozenset(X)
    if not X <= set(system.atoms):
        raise UnknownSystemError(f"{sorted(X)} is not an atom subset of {system.name}")
    return X


def support(g: GroupElement) -> frozenset[int]:
    """Letter set of any positive word for g (the defining relations preserve
    letter sets, so this is well defined)."""
    if not g.is_positive:
        raise NotPositiveError("support is defined for positive elements only")
    if g.k >= 1:
        return frozenset(g.system.atoms)
    out: set[int] = set()
    for f in g.factors:
        out.update(f.word)
    return frozenset(out)


@functools.lru_cache(maxsize=None)
def _sub_delta_carrier(system: ArtinSystem, X: frozenset) -> CoxeterElement:
    acc = system.identity
    for i in sorted(X):
        acc = prefix_join(acc, system.reflection(i))
    return acc


def sub_delta(system: ArtinSystem, X) -> GroupElement:
    """Delta_X, the lcm of the atoms in X (identity for empty X)."""
    X = _check_atoms(system, X)
    return GroupElement.lift(_sub_delta_carrier(system, X))


def tau_sub(g: GroupElement, X, power: int = 1) -> GroupElement:
    """Delta_X^{-power} g Delta_X^{power}."""
    d = sub_delta(g.system, X) ** power
    return d.inv() * g * d


@functools.lru_cache(maxsize=None)
def tau_sub_atoms(system: ArtinSystem, X: frozenset) -> dict[int, int]:
    """The permutation of X induced by conjugation with Delta_X."""
    X = _check_atoms(system, X)
    d = _sub_delta_carrier(system, X)
    out = {}
    for s in sorted(X):
        img = d.inverse * system.reflection(s) * d
        for t in X:
            if img == system.reflection(t):
                out[s] = t
                break
        else:
            raise PreconditionError("Delta_X conjugation left the atom set")
    return out


def central_delta_exponent(system: ArtinSystem, X) -> int:
    """Smallest e in {1, 2} with Delta_X^e central in A_X (e = 1 when the
    Delta_X conjugation fixes X pointwise)."""
    X = _check_atoms(system, X)
    if not X:
        return 1
    perm = tau_sub_atoms(system, X)
    return 1 if all(perm[s] == s for s in X) else 2


# ---------------------------------------------------------------------------
# Membership via reduced fractions.


def _strip_common_prefix(a: GroupElement, b: GroupElement):
    """Reduce a positive pair by their prefix gcd, one atom at a time."""
    system = a.system
    while True:
        common = a.atomic_prefixes() & b.atomic_prefixes()
        if not common:
            return a, b
        s = GroupElement.atom(system, min(common)).inv()
        a = s * a
        b = s * b


def reduced_fraction(g: GroupElement) -> tuple[GroupElement, GroupElement]:
    """The unique coprime positive pair (a, b) with g = a^{-1} b."""
    system = g.system
    if g.is_positive:
        return GroupElement.identity(system), g
    num = GroupElement(system, 0, g.factors)
    den = GroupElement.delta_power(system, -g.k)
    return _strip_common_prefix(den, num)


def member(g: GroupElement, X) -> bool:
    """Membership of g in the standard parabolic subgroup A_X."""
    X = _check_atoms(g.system, X)
    den, num = reduced_fraction(g)
    return support(den) <= X and support(num) <= X


# ---------------------------------------------------------------------------
# Subsystems: each connected component of X is itself a catalog system.


@dataclass(frozen=True, eq=False)
class SubsystemComponent:
    child: ArtinSystem
    to_child: dict  # parent atom -> child atom
    to_parent: dict

    def parent_word(self, letters) -> list[int]:
        back = self.to_parent
        return [back[abs(i)] if i > 0 else -back[abs(i)] for i in letters]

    def child_word(self, letters) -> list[int]:
        fwd = self.to_child
        return [fwd[abs(i)] if i > 0 else -fwd[abs(i)] for i in letters]


@functools.lru_cache(maxsize=None)
def subsystem_components(system: ArtinSystem, X: frozenset) -> tuple[SubsystemComponent, ...]:
    X = _check_atoms(system, X)
    comps = []
    remaining = set(X)
    while remaining:
        seed = min(remaining)
        comp = {seed}
        stack = [seed]
        while stack:
            cur = stack.pop()
            for other in remaining - comp:
                if system.matrix.entry(cur, other) >= 3:
                    comp.add(other)
                    stack.append(other)
        remaining -= comp
        atoms = sorted(comp)
        entries = tuple(
            tuple(system.matrix.entry(a, b) if a != b else 1 for b in atoms) for a in atoms
        )
        name, mapping = classify_with_map(CoxeterMatrix(tuple(atoms), entries))
        child = parse_system(name)
        to_child = dict(mapping)
        to_parent = {v: k for k, v in mapping.items()}
        comps.append(SubsystemComponent(child=child, to_child=to_child, to_parent=to_parent))
    return tuple(comps)


def _parabolic_word(g: GroupElement, X: frozenset) -> list[int]:
    """A signed word for g in the atoms of X (requires g in A_X)."""
    den, num = reduced_fraction(g)
    if not (support(den) <= X and support(num) <= X):
        raise MembershipError(f"element is not in the parabolic on {sorted(X)}")
    dword = den.atom_word()
    return [-s for s in reversed(dword)] + num.atom_word()


def parabolic_normal_form(g: GroupElement, X) -> tuple[int, tuple[CoxeterElement, ...]]:
    """Left normal form of g relative to the Garside structure of A_X:
    g = Delta_X^k s_1 ... s_l with the s_i simples of A_X (hence of A).

    For reducible X the normal form is taken in the product Garside
    structure: component forms are aligned on a common Delta_X exponent and
    padded, which keeps adjacent pairs left-weighted.
    """
    system = g.system
    X = _check_atoms(system, X)
    word = _parabolic_word(g, X)
    comps = subsystem_components(system, X)
    per: list[tuple[SubsystemComponent, GroupElement]] = []
    for comp in comps:
        letters = [i for i in word if abs(i) in comp.to_child]
        sub = GroupElement.from_word(comp.child, comp.child_word(letters))
        per.append((comp, sub))
    if not per:
        if not g.is_identity:
            raise MembershipError("nontrivial element in the empty parabolic")
        return 0, ()
    k = min(sub.k for _, sub in per)
    width = max(sub.sup - k for _, sub in per)
    factors: list[CoxeterElement] = []
    for j in range(width):
        carrier = system.identity
        for comp, sub in per:
            pad = sub.k - k
            if j < pad:
                child_c = comp.child.w0
            elif j - pad < len(sub.factors):
                child_c = sub.factors[j - pad]
            else:
                child_c = comp.child.identity
            carrier = carrier * system.word_element(comp.parent_word(child_c.word))
        factors.append(carrier)
    return k, tuple(factors)


# ---------------------------------------------------------------------------
# Ribbons.


@dataclass(frozen=True)
class RibbonFactor:
    """An elementary ribbon between X and Y = (X u t) \\ {image of t}.

    ``value`` is Delta_{X u t} Delta_X^{-1} (right) or its reverse,
    Delta_X^{-1} Delta_{X u t} (left)."""

    source: frozenset[int]
    atom: int
    side: str
    target: frozenset[int]
    value: GroupElement

    def to_json(self) -> dict:
        return {
            "source": sorted(self.source),
            "atom": self.atom,
            "side": self.side,
            "target": sorted(self.target),
            "value": self.value.to_json(),
        }


def ribbon(system: ArtinSystem, X, t: int, side: str = "right") -> RibbonFactor:
    X = _check_atoms(system, X)
    if t in X:
        raise PreconditionError(f"atom {t} already lies in {sorted(X)}")
    if t not in system.atoms:
        raise UnknownSystemError(f"no atom {t} in {system.name}")
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    big = sub_delta(system, X | {t})
    small = sub_delta(system, X)
    right_value = big * small.inv()
    value = right_value if side == "right" else small.inv() * big
    if not (value.is_positive and value.is_simple):
        raise PreconditionError("ribbon value failed the simplicity check")
    # target: conjugation r x r^{-1} maps X onto Y for the right ribbon (and
    # X r_left = r_left Y gives the same Y); compute on carriers.
    c = right_value.as_simple()
    target = set()
    for x in X:
        img = c * system.reflection(x) * c.inverse
        hits = [u for u in system.atoms if system.reflection(u) == img]
        if not hits:
            raise PreconditionError("ribbon conjugation left the atom set")
        target.add(hits[0])
    return RibbonFactor(source=X, atom=t, side=side, target=frozenset(target), value=value)


@dataclass(frozen=True)
class RibbonChain:
    """A product of left ribbons r_1 ... r_m with matching set sequence
    X_1 = source, ..., X_{m+1} = target."""

    system: ArtinSystem
    factors: tuple[RibbonFactor, ...]
    sets: tuple[frozenset[int], ...]

    def __post_init__(self):
        if len(self.sets) != len(self.factors) + 1:
            raise PreconditionError("ribbon chain sets out of step with factors")
        for i, f in enumerate(self.factors):
            if f.side != "left" or f.source != self.sets[i] or f.target != self.sets[i + 1]:
                raise PreconditionError("ribbon chain adjacency broken")

    @property
    def source(self) -> frozenset[int]:
        return self.sets[0]

    @property
    def target(self) -> frozenset[int]:
        return self.sets[-1]

    def value(self) -> GroupElement:
        acc = GroupElement.identity(self.system)
        for f in self.factors:
            acc = acc * f.value
        return acc

    def to_json(self) -> dict:
        return {
            "factors": [f.to_json() for f in self.factors],
            "sets": [sorted(s) for s in self.sets],
        }


# ---------------------------------------------------------------------------
# Minimal conjugators and the alpha-beta factorization.


def minimal_conjugator(u: GroupElement, x: GroupElement) -> tuple[GroupElement, str]:
    """A minimal prefix of x conjugating u to a positive element: either an
    atom of X = supp(u) ("in_parabolic") or a left ribbon r_{t,X} ("ribbon").

    Candidates are scanned by atom index, atoms of X first.
    """
    system = u.system
    if x.is_identity:
        raise PreconditionError("x must be nontrivial")
    if not u.is_positive:
        raise NotPositiveError("u must be positive")
    X = support(u)
    for s in sorted(X):
        c = GroupElement.atom(system, s)
        if c.divides(x) and (c.inv() * u * c).is_positive:
            return c, "in_parabolic"
    for t in sorted(set(system.atoms) - X):
        r = ribbon(system, X, t, side="left").value
        if r.divides(x) and (r.inv() * u * r).is_positive:
            return r, "ribbon"
    raise NoConjugatorError("x does not start with a positive conjugator of u")


def factor_conjugator(u: GroupElement, x: GroupElement) -> tuple[GroupElement, RibbonChain]:
    """Write a positive conjugator x of u as alpha * beta with alpha in A_X
    (X = supp(u)) and beta a chain of left ribbons from X to supp(x^{-1}ux).

    Extracts minimal conjugators repeatedly, commuting parabolic factors
    leftward past ribbons as they appear.
    """
    system = u.system
    if not (u.is_positive and x.is_positive):
        raise NotPositiveError("u and x must be positive")
    if not (x.inv() * u * x).is_positive:
        raise NoConjugatorError("x does not conjugate u to a positive element")
    X = support(u)
    alpha = GroupElement.identity(system)
    chain_factors: list[RibbonFactor] = []
    sets = [X]
    v = u
    rest = x
    while not rest.is_identity:
        c, kind = minimal_conjugator(v, rest)
        if kind == "in_parabolic":
            # push c left through the chain: each ribbon r maps its target
            # parabolic onto its source (r a r^{-1}), landing in A_X.
            moved = c
            for f in reversed(chain_factors):
                moved = f.value * moved * f.value.inv()
            if not member(moved, X):
                raise PreconditionError("conjugated parabolic factor escaped A_X")
            alpha = alpha * moved
        else:
            Y = support(v)
            t = _ribbon_atom(system, Y, c)
            f = ribbon(system, Y, t, side="left")
            chain_factors.append(f)
            sets.append(f.target)
        v = c.inv() * v * c
        rest = c.inv() * rest
        if not v.is_positive or not rest.is_positive:
            raise PreconditionError("minimal conjugator produced a negative remainder")
    chain = RibbonChain(system=system, factors=tuple(chain_factors), sets=tuple(sets))
    return alpha, chain


def _ribbon_atom(system: ArtinSystem, Y: frozenset[int], value: GroupElement) -> int:
    for t in sorted(set(system.atoms) - Y):
        if ribbon(system, Y, t, side="left").value == value:
            return t
    raise NoConjugatorError("value is not a left ribbon of the given source")
