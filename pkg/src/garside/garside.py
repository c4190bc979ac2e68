"""Garside structure of a spherical-type Artin-Tits group.

Simple elements are the positive lifts of Coxeter group elements (the
square-free positives), so a simple is represented directly by its carrier
:class:`~garside.coxeter.CoxeterElement`.  A group element is stored in left
normal form Delta^k s_1 ... s_r with every adjacent pair left-weighted and no
factor equal to 1 or Delta; the pair (k, factor tuple) is canonical and
solves the word problem by plain equality.

The pair condition: s.t is left-weighted iff every atomic prefix of t is an
atomic suffix of s, i.e. L(t) is contained in R(s) on carriers.  Local
renormalization transfers descents from the left of t to the right of s; the
global normal form is computed by bubble passes of these transfers from the
left end until a pass makes no change, after which leading Delta factors
merge into the exponent k and trailing identities disappear.

Everything is a pure function of immutable values; elements can be shared
across threads without synchronization.
"""

from __future__ import annotations

import functools

from .coxeter import ArtinSystem, CoxeterElement
from .errors import MixedSystemsError, NotSimpleError, UnknownSystemError


def _check_same(a: "GroupElement", b: "GroupElement"):
    if a.system is not b.system:
        raise MixedSystemsError("elements belong to different systems")


@functools.lru_cache(maxsize=1 << 20)
def _transfer(a: CoxeterElement, b: CoxeterElement):
    """Make the pair (a, b) left-weighted, preserving the product of lifts."""
    while True:
        movable = b.left_descents - a.right_descents
        if not movable:
            return a, b
        s = min(movable)
        refl = a.system.reflection(s)
        a = a * refl
        b = refl * b


def _normal_factors(
    system: ArtinSystem, carriers
) -> tuple[int, tuple[CoxeterElement, ...]]:
    """Left normal form of a product of simple lifts: bubble passes until a
    full pass is stable, then strip leading Deltas and trailing identities."""
    fs = [c for c in carriers if not c.is_identity]
    while True:
        changed = False
        for i in range(len(fs) - 1):
            a, b = _transfer(fs[i], fs[i + 1])
            if a is not fs[i] or b is not fs[i + 1]:
                if a != fs[i] or b != fs[i + 1]:
                    changed = True
                fs[i], fs[i + 1] = a, b
        while fs and fs[-1].is_identity:
            fs.pop()
        if not changed:
            break
    k = 0
    while fs and fs[0].is_longest:
        k += 1
        fs.pop(0)
    return k, tuple(fs)


class GroupElement:
    """A group element in canonical left normal form Delta^k s_1 ... s_r."""

    __slots__ = ("system", "k", "factors", "_hash")

    def __init__(self, system: ArtinSystem, k: int, factors: tuple[CoxeterElement, ...]):
        self.system = system
        self.k = k
        self.factors = factors
        self._hash = hash((k, tuple(f.signed for f in factors)))

    # -- constructors ------------------------------------------------------

    @staticmethod
    def identity(system: ArtinSystem) -> "GroupElement":
        return GroupElement(system, 0, ())

    @staticmethod
    def delta_power(system: ArtinSystem, k: int) -> "GroupElement":
        return GroupElement(system, k, ())

    @staticmethod
    def lift(carrier: CoxeterElement) -> "GroupElement":
        """The positive lift of a Coxeter element (a simple element)."""
        if carrier.is_identity:
            return GroupElement.identity(carrier.system)
        if carrier.is_longest:
            return GroupElement(carrier.system, 1, ())
        return GroupElement(carrier.system, 0, (carrier,))

    @staticmethod
    def atom(system: ArtinSystem, i: int) -> "GroupElement":
        if i not in system.atoms:
            raise UnknownSystemError(f"no atom {i} in {system.name}")
        return GroupElement(system, 0, (system.reflection(i),))

    @staticmethod
    def from_word(system: ArtinSystem, letters) -> "GroupElement":
        """Evaluate a signed atom word: i is sigma_i, -i its inverse."""
        out = GroupElement.identity(system)
        for raw in letters:
            i = int(raw)
            if i == 0 or abs(i) not in system.atoms:
                raise UnknownSystemError(f"invalid letter {raw} for {system.name}")
            g = GroupElement.atom(system, abs(i))
            out = out * (g if i > 0 else g.inv())
        return out

    # -- canonical data ----------------------------------------------------

    @property
    def inf(self) -> int:
        return self.k

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def sup(self) -> int:
        return self.k + len(self.factors)

    @property
    def garside_length(self) -> int:
        """Geodesic word length over the Garside generators and inverses."""
        return max(self.sup, 0) - min(self.k, 0)

    def lengths(self) -> tuple[int, int, int, int]:
        return (self.inf, self.sup, self.canonical_length, self.garside_length)

    @property
    def is_identity(self) -> bool:
        return self.k == 0 and not self.factors

    @property
    def is_positive(self) -> bool:
        return self.k >= 0

    def as_simple(self) -> CoxeterElement:
        """The carrier, when this element is simple; raises otherwise."""
        if self.is_identity:
            return self.system.identity
        if self.k == 1 and not self.factors:
            return self.system.w0
        if self.k == 0 and len(self.factors) == 1:
            return self.factors[0]
        raise NotSimpleError(f"{self} is not a simple element")

    @property
    def is_simple(self) -> bool:
        return (self.k, len(self.factors)) in ((0, 0), (1, 0), (0, 1))

    # -- arithmetic --------------------------------------------------------

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        _check_same(self, other)
        if other.k % 2:
            mine = [f.conj_by_w0() for f in self.factors]
        else:
            mine = list(self.factors)
        k, fs = _normal_factors(self.system, mine + list(other.factors))
        return GroupElement(self.system, self.k + other.k + k, fs)

    def inv(self) -> "GroupElement":
        """Inverse via Delta^{-sup} times the positive complement."""
        system = self.system
        w0 = system.w0
        m = self.sup
        comps = []
        for i, f in enumerate(reversed(self.factors)):
            c = f.inverse * w0  # right complement: lift(f) * lift(c) = Delta
            if (m + i) % 2:
                c = c.conj_by_w0()
            comps.append(c)
        k, fs = _normal_factors(system, comps)
        return GroupElement(system, -m + k, fs)

    def __pow__(self, exp: int) -> "GroupElement":
        base = self if exp >= 0 else self.inv()
        exp = abs(exp)
        acc = GroupElement.identity(self.system)
        while exp:
            if exp & 1:
                acc = acc * base
            base = base * base
            exp >>= 1
        return acc

    def conjugate(self, by: "GroupElement") -> "GroupElement":
        """by^{-1} * self * by."""
        return by.inv() * self * by

    def tau(self, power: int = 1) -> "GroupElement":
        """Conjugation by Delta^power; preserves inf, sup and length."""
        if power % 2 == 0:
            return self
        return GroupElement(self.system, self.k, tuple(f.conj_by_w0() for f in self.factors))

    def reverse(self) -> "GroupElement":
        """Image under the word-reversal anti-automorphism."""
        acc = GroupElement.identity(self.system)
        for f in reversed(self.factors):
            acc = acc * GroupElement.lift(f.inverse)
        return acc * GroupElement.delta_power(self.system, self.k)

    # -- order -------------------------------------------------------------

    def divides(self, other: "GroupElement", side: str = "prefix") -> bool:
        """Prefix: self^{-1} * other positive.  Suffix: other * self^{-1}."""
        _check_same(self, other)
        if side == "prefix":
            return (self.inv() * other).is_positive
        if side == "suffix":
            return (other * self.inv()).is_positive
        raise ValueError(f"side must be 'prefix' or 'suffix', got {side!r}")

    def atomic_prefixes(self) -> frozenset[int]:
        """Atoms s with sigma_s a prefix divisor (positive elements only)."""
        if self.k >= 1:
            return frozenset(self.system.atoms)
        if self.factors:
            return self.factors[0].left_descents
        return frozenset()

    # -- presentation ------------------------------------------------------

    def factor_words(self) -> list[list[int]]:
        return [list(f.word) for f in self.factors]

    def atom_word(self) -> list[int]:
        """A signed atom word for this element (Delta-part first)."""
        dword = list(self.system.w0.word)
        out: list[int] = []
        if self.k >= 0:
            out.extend(dword * self.k)
        else:
            out.extend([-s for s in reversed(dword)] * (-self.k))
        for f in self.factors:
            out.extend(f.word)
        return out

    def nf_text(self) -> str:
        """Display form, e.g. ``Δ^0 · (1)(1 2)``."""
        head = f"Δ^{self.k}"
        if not self.factors:
            return head
        body = "".join("(" + " ".join(map(str, f.word)) + ")" for f in self.factors)
        return head + " · " + body

    def to_json(self) -> dict:
        return {"inf": self.k, "factors": self.factor_words()}

    @staticmethod
    def from_json(system: ArtinSystem, data: dict) -> "GroupElement":
        out = GroupElement.delta_power(system, int(data["inf"]))
        for word in data["factors"]:
            out = out * GroupElement.lift(system.word_element(word))
        return out

    def sort_key(self):
        return (self.k, len(self.factors), tuple(f.signed for f in self.factors))

    def __eq__(self, other):
        return (
            isinstance(other, GroupElement)
            and self.system is other.system
            and self.k == other.k
            and self.factors == other.factors
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"<{self.system.name} {self.nf_text()}>"


# ---------------------------------------------------------------------------
# Simple-element lattice.  The prefix order on simples is the weak order on
# carriers: meets extract common descents greedily; joins go through the
# w0-duality  a v b = w0 * suffix_meet(a^{-1} w0, b^{-1} w0)^{-1}.


def delta(system: ArtinSystem) -> GroupElement:
    """The Garside element, computed as the iterated lcm of the atoms."""
    carrier = _delta_carrier(system)
    return GroupElement(system, 1, ()) if carrier.is_longest else GroupElement.lift(carrier)


@functools.lru_cache(maxsize=None)
def _delta_carrier(system: ArtinSystem) -> CoxeterElement:
    acc = system.identity
    for i in system.atoms:
        acc = prefix_join(acc, system.reflection(i))
    return acc


def prefix_meet(a: CoxeterElement, b: CoxeterElement) -> CoxeterElement:
    system = a.system
    out = system.identity
    while True:
        common = a.left_descents & b.left_descents
        if not common:
            return out
        s = system.reflection(min(common))
        out = out * s
        a = s * a
        b = s * b


def suffix_meet(a: CoxeterElement, b: CoxeterElement) -> CoxeterElement:
    system = a.system
    out = system.identity
    while True:
        common = a.right_descents & b.right_descents
        if not common:
            return out
        s = system.reflection(min(common))
        out = s * out
        a = a * s
        b = b * s


def prefix_join(a: CoxeterElement, b: CoxeterElement) -> CoxeterElement:
    w0 = a.system.w0
    return w0 * suffix_meet(a.inverse * w0, b.inverse * w0).inverse


def suffix_join(a: CoxeterElement, b: CoxeterElement) -> CoxeterElement:
    w0 = a.system.w0
    return prefix_meet(w0 * a.inverse, w0 * b.inverse).inverse * w0


def lattice(a: GroupElement, b: GroupElement, op: str, side: str) -> GroupElement:
    """gcd/lcm of two simple elements in the chosen order."""
    _check_same(a, b)
    ca, cb = a.as_simple(), b.as_simple()
    fn = {
        ("meet", "prefix"): prefix_meet,
        ("meet", "suffix"): suffix_meet,
        ("join", "prefix"): prefix_join,
        ("join", "suffix"): suffix_join,
    }.get((op, side))
    if fn is None:
        raise ValueError(f"unknown lattice operation {(op, side)!r}")
    return GroupElement.lift(fn(ca, cb))


def is_left_weighted(a: GroupElement, b: GroupElement) -> bool:
    """s.t left-weighted: every atomic prefix of t is an atomic suffix of s."""
    _check_same(a, b)
    return b.as_simple().left_descents <= a.as_simple().right_descents


def is_right_weighted(a: GroupElement, b: GroupElement) -> bool:
    _check_same(a, b)
    return a.as_simple().right_descents <= b.as_simple().left_descents


def normalize(system: ArtinSystem, word) -> GroupElement:
    """Left normal form of a signed atom word (whitespace string or ints)."""
    if isinstance(word, str):
        letters = [int(tok) for tok in word.split()]
    else:
        letters = list(word)
    return GroupElement.from_word(system, letters)
