"""Finite Coxeter groups for the ten spherical families, modelled exactly.

A system is built from a root-system model: a list of positive roots over an
exact coefficient ring together with, for every atom, the signed permutation
its reflection induces on that list.  A group element is then stored as its
signed action on positive roots, which is a faithful, canonical encoding for
finite Coxeter groups.  Everything downstream (descents, length, the word
problem) reduces to integer permutation work:

- length(w)        = number of positive roots sent negative,
- right descents   = atoms i with w(alpha_i) < 0,
- left descents    = right descents of the inverse.

Coefficient rings: plain integers for the crystallographic families
(A, B, D, E, F), the quadratic ring Z[(1+sqrt5)/2] for H3/H4, and an
index-based dihedral model for I2(m) that avoids coefficients entirely.
No family is ever handled by enumerating the group; E8 uses the same
120-root tables as everything else.

All values here are immutable after construction, so they can be shared
freely across threads.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field

from .errors import NotSphericalError, ReducibleSystemError, UnknownSystemError
from .util import enumeration_budget
from .errors import BudgetExceededError

FAMILIES = ("A", "B", "D", "E", "F", "H", "I2")


class Golden:
    """An element a + b*phi of Z[phi], phi the golden ratio (phi^2 = phi + 1).

    Comparisons are exact: the sign of a + b*phi is decided with integer
    arithmetic only.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int = 0):
        self.a = a
        self.b = b

    def __add__(self, other):
        other = _gold(other)
        return Golden(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = _gold(other)
        return Golden(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return _gold(other) - self

    def __neg__(self):
        return Golden(-self.a, -self.b)

    def __mul__(self, other):
        other = _gold(other)
        # (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
        a, b, c, d = self.a, self.b, other.a, other.b
        return Golden(a * c + b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def sign(self) -> int:
        # a + b phi = (t + u sqrt5)/2 with t = 2a + b, u = b.
        t, u = 2 * self.a + self.b, self.b
        if t == 0 and u == 0:
            return 0
        if t >= 0 and u >= 0:
            return 1
        if t <= 0 and u <= 0:
            return -1
        if t > 0:  # u < 0
            return 1 if t * t > 5 * u * u else -1
        return 1 if 5 * u * u > t * t else -1

    def __eq__(self, other):
        other = _gold(other)
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __repr__(self):
        return f"Golden({self.a}, {self.b})"

    def sort_key(self):
        return (self.a, self.b)


def _gold(x) -> Golden:
    if isinstance(x, Golden):
        return x
    if isinstance(x, int):
        return Golden(x)
    raise TypeError(f"cannot coerce {x!r} into Z[phi]")


@dataclass(frozen=True)
class CoxeterMatrix:
    """A symmetric Coxeter matrix over an ordered atom list.

    ``entry(s, t)`` is m(s, t): 1 on the diagonal, >= 2 off it.  Infinite
    labels are not representable; spherical types never need them.
    """

    atoms: tuple[int, ...]
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.atoms)
        if len(set(self.atoms)) != n or n == 0:
            raise UnknownSystemError("atom list must be nonempty and duplicate-free")
        if len(self.entries) != n or any(len(r) != n for r in self.entries):
            raise UnknownSystemError("matrix shape does not match the atom list")
        for i in range(n):
            if self.entries[i][i] != 1:
                raise UnknownSystemError("diagonal entries must be 1")
            for j in range(i + 1, n):
                m = self.entries[i][j]
                if m != self.entries[j][i]:
                    raise UnknownSystemError("matrix must be symmetric")
                if not isinstance(m, int) or m < 2:
                    raise UnknownSystemError("off-diagonal entries must be integers >= 2")

    def entry(self, s: int, t: int) -> int:
        return self.entries[self.atoms.index(s)][self.atoms.index(t)]

    @property
    def rank(self) -> int:
        return len(self.atoms)


def _matrix_from_edges(n: int, edges: dict[tuple[int, int], int]) -> CoxeterMatrix:
    ent = [[2] * n for _ in range(n)]
    for i in range(n):
        ent[i][i] = 1
    for (a, b), m in edges.items():
        ent[a - 1][b - 1] = ent[b - 1][a - 1] = m
    return CoxeterMatrix(tuple(range(1, n + 1)), tuple(tuple(r) for r in ent))


# ---------------------------------------------------------------------------
# Catalog: canonical matrices, linear labelling along the graph.  The marked
# edge of B/F/H sits between the two lowest-numbered atoms it touches.


def _catalog_edges(family: str, rank: int, m: int = 0) -> dict[tuple[int, int], int]:
    path = {(i, i + 1): 3 for i in range(1, rank)}
    if family == "A":
        return path
    if family == "B":
        path[(1, 2)] = 4
        return path
    if family == "D":
        edges = {(i, i + 1): 3 for i in range(1, rank - 1)}
        edges[(rank - 2, rank)] = 3
        return edges
    if family == "E":
        edges = {(i, i + 1): 3 for i in range(1, rank - 1)}
        edges[(3, rank)] = 3
        return edges
    if family == "F":
        path[(2, 3)] = 4
        return path
    if family == "H":
        path[(1, 2)] = 5
        return path
    if family == "I2":
        return {(1, 2): m}
    raise UnknownSystemError(f"unknown family {family!r}")


_W_ORDER = {
    "E6": 51840,
    "E7": 2903040,
    "E8": 696729600,
    "F4": 1152,
    "H3": 120,
    "H4": 14400,
}


def _coxeter_order(family: str, rank: int, m: int = 0) -> int:
    if family == "A":
        return _factorial(rank + 1)
    if family == "B":
        return 2**rank * _factorial(rank)
    if family == "D":
        return 2 ** (rank - 1) * _factorial(rank)
    if family == "I2":
        return 2 * m
    return _W_ORDER[f"{family}{rank}"]


def _positive_root_count(family: str, rank: int, m: int = 0) -> int:
    return {
        "A": rank * (rank + 1) // 2,
        "B": rank * rank,
        "D": rank * (rank - 1),
        "I2": m,
    }.get(family) or {"E6": 36, "E7": 63, "E8": 120, "F4": 24, "H3": 15, "H4": 60}[
        f"{family}{rank}"
    ]


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


# ---------------------------------------------------------------------------
# Root models.  For crystallographic families we run the reflection
#   s_i(v)_i = v_i - sum_j a[i][j] v_j      (a = generalized Cartan matrix)
# on integer coefficient vectors over the simple-root basis; H3/H4 use the
# same recipe over Z[phi] with a[i][j] = -2cos(pi/m(i,j)).


def _cartan(family: str, rank: int, edges: dict[tuple[int, int], int]):
    golden = family == "H"
    two = Golden(2) if golden else 2
    zero = Golden(0) if golden else 0
    a = [[zero] * rank for _ in range(rank)]
    for i in range(rank):
        a[i][i] = two
    for (s, t), m in edges.items():
        i, j = s - 1, t - 1
        if m == 3:
            a[i][j] = a[j][i] = Golden(-1) if golden else -1
        elif m == 4:
            # short root first in our labelling; the asymmetric pair -2/-1
            a[min(i, j)][max(i, j)] = -2
            a[max(i, j)][min(i, j)] = -1
        elif m == 5:
            a[i][j] = a[j][i] = Golden(0, -1)
        else:
            raise UnknownSystemError(f"edge weight {m} unsupported by the Cartan model")
    return a


@dataclass(frozen=True, eq=False)
class RootSystemModel:
    """Positive roots plus, per atom, the signed permutation of its reflection.

    ``act[i][r]`` is +-(index+1): the image of positive root ``r`` under the
    reflection of atom ``i+1``, negative when the image is a negative root
    (which happens exactly for the atom's own simple root).
    """

    n_roots: int
    act: tuple[tuple[int, ...], ...]
    simple_index: tuple[int, ...]  # root index of alpha_i per atom

    def __post_init__(self):
        for i, row in enumerate(self.act):
            negs = [r for r, v in enumerate(row) if v < 0]
            if negs != [self.simple_index[i]]:
                raise NotSphericalError(
                    "reflection must negate exactly its own simple root"
                )


def _build_root_model(family: str, rank: int, m: int = 0) -> RootSystemModel:
    if family == "I2":
        return _dihedral_model(m)
    edges = _catalog_edges(family, rank, m)
    cartan = _cartan(family, rank, edges)
    golden = family == "H"
    one = Golden(1) if golden else 1
    zero = Golden(0) if golden else 0

    def reflect(i: int, v: tuple) -> tuple:
        c = zero
        for j in range(rank):
            c = c + cartan[i][j] * v[j]
        out = list(v)
        out[i] = v[i] - c
        return tuple(out)

    def positive(v: tuple) -> bool:
        if golden:
            return all(x.sign() >= 0 for x in v)
        return all(x >= 0 for x in v)

    simples = []
    for i in range(rank):
        e = [zero] * rank
        e[i] = one
        simples.append(tuple(e))
    roots = set(simples)
    frontier = list(simples)
    while frontier:
        nxt = []
        for v in frontier:
            for i in range(rank):
                w = reflect(i, v)
                if positive(w) and w not in roots:
                    roots.add(w)
                    nxt.append(w)
        frontier = nxt

    expected = _positive_root_count(family, rank, m)
    if len(roots) != expected:
        raise NotSphericalError(
            f"root enumeration produced {len(roots)} positive roots, expected {expected}"
        )

    if golden:
        ordered = sorted(roots, key=lambda v: tuple(x.sort_key() for x in v))
    else:
        ordered = sorted(roots)
    index = {v: r for r, v in enumerate(ordered)}
    act = []
    for i in range(rank):
        row = []
        for v in ordered:
            w = reflect(i, v)
            if positive(w):
                row.append(index[w] + 1)
            else:
                neg = tuple(-x for x in w)
                row.append(-(index[neg] + 1))
        act.append(tuple(row))
    return RootSystemModel(
        n_roots=len(ordered),
        act=tuple(act),
        simple_index=tuple(index[s] for s in simples),
    )


def _dihedral_model(m: int) -> RootSystemModel:
    """I2(m) on root directions j*pi/m: positive roots are j = 0..m-1, with
    alpha_1 at j = 0 and alpha_2 at j = m-1.  A reflection in root j sends
    root k to direction 2j - k + m (mod 2m); indices >= m are negatives."""

    def signed(img: int) -> int:
        img %= 2 * m
        return img + 1 if img < m else -((img - m) + 1)

    act1 = tuple(signed(m - k) for k in range(m))
    act2 = tuple(signed(3 * m - 2 - k) for k in range(m))
    return RootSystemModel(n_roots=m, act=(act1, act2), simple_index=(0, m - 1))


# ---------------------------------------------------------------------------
# Elements.


class CoxeterElement:
    """A finite Coxeter group element, encoded by its signed action on the
    positive-root list.  Two elements are equal iff they act identically;
    this doubles as the canonical form."""

    __slots__ = ("system", "signed", "__dict__")

    def __init__(self, system: "ArtinSystem", signed: tuple[int, ...]):
        self.system = system
        self.signed = signed

    def __eq__(self, other):
        return (
            isinstance(other, CoxeterElement)
            and self.system is other.system
            and self.signed == other.signed
        )

    def __hash__(self):
        return hash(self.signed)

    def __mul__(self, other: "CoxeterElement") -> "CoxeterElement":
        if self.system is not other.system:
            from .errors import MixedSystemsError

            raise MixedSystemsError("cannot multiply elements of different systems")
        a = self.signed
        out = tuple(a[v - 1] if v > 0 else -a[-v - 1] for v in other.signed)
        return self.system.intern(out)

    @functools.cached_property
    def inverse(self) -> "CoxeterElement":
        out = [0] * len(self.signed)
        for j, v in enumerate(self.signed):
            out[abs(v) - 1] = (j + 1) if v > 0 else -(j + 1)
        return self.system.intern(tuple(out))

    @functools.cached_property
    def length(self) -> int:
        return sum(1 for v in self.signed if v < 0)

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    @property
    def is_longest(self) -> bool:
        return self.length == self.system.n_positive_roots

    @functools.cached_property
    def right_descents(self) -> frozenset[int]:
        simple = self.system.roots.simple_index
        return frozenset(
            i + 1 for i in range(self.system.rank) if self.signed[simple[i]] < 0
        )

    @functools.cached_property
    def left_descents(self) -> frozenset[int]:
        return self.inverse.right_descents

    def descents(self, side: str) -> frozenset[int]:
        if side == "left":
            return self.left_descents
        if side == "right":
            return self.right_descents
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")

    @functools.cached_property
    def word(self) -> tuple[int, ...]:
        """Reduced word by greedy extraction of the smallest left descent."""
        out = []
        w = self
        while not w.is_identity:
            s = min(w.left_descents)
            out.append(s)
            w = w.system.reflection(s) * w
        return tuple(out)

    def conj_by_w0(self) -> "CoxeterElement":
        w0 = self.system.w0
        return w0 * self * w0

    def __repr__(self):
        return f"<{self.system.name}: {' '.join(map(str, self.word)) or 'e'}>"


# ---------------------------------------------------------------------------
# Systems.


@dataclass(frozen=True, eq=False)
class ArtinSystem:
    """A validated spherical-type Artin-Tits system with its root model.

    Systems are interned by canonical name (``parse_system`` caches), so
    identity comparison is the intended equality.
    """

    name: str
    family: str
    rank: int
    m_label: int  # dihedral m for I2(m), else 0
    matrix: CoxeterMatrix
    roots: RootSystemModel = field(repr=False)

    @property
    def atoms(self) -> tuple[int, ...]:
        return self.matrix.atoms

    @functools.cached_property
    def _intern_table(self) -> dict:
        return {}

    def intern(self, signed: tuple[int, ...]) -> "CoxeterElement":
        """Shared instance per action, so per-element caches persist."""
        got = self._intern_table.get(signed)
        if got is None:
            got = CoxeterElement(self, signed)
            self._intern_table[signed] = got
        return got

    @property
    def n_positive_roots(self) -> int:
        return self.roots.n_roots

    @functools.cached_property
    def coxeter_order(self) -> int:
        return _coxeter_order(self.family, self.rank, self.m_label)

    @functools.cached_property
    def identity(self) -> CoxeterElement:
        return self.intern(tuple(range(1, self.n_positive_roots + 1)))

    def reflection(self, atom: int) -> CoxeterElement:
        return self._reflections[atom - 1]

    @functools.cached_property
    def _reflections(self) -> tuple[CoxeterElement, ...]:
        return tuple(self.intern(row) for row in self.roots.act)

    @functools.cached_property
    def w0(self) -> CoxeterElement:
        w = self.identity
        while True:
            free = [i for i in self.atoms if i not in w.right_descents]
            if not free:
                break
            w = w * self.reflection(free[0])
        if w.length != self.n_positive_roots:
            raise NotSphericalError("longest element has wrong length")
        return w

    def word_element(self, letters) -> CoxeterElement:
        w = self.identity
        for s in letters:
            w = w * self.reflection(s)
        return w

    @functools.cached_property
    def commuting_pairs(self) -> tuple[tuple[int, int], ...]:
        out = []
        for i in self.atoms:
            for j in self.atoms:
                if i < j and self.matrix.entry(i, j) == 2:
                    out.append((i, j))
        return tuple(out)

    def all_elements(self, budget: int | None = None) -> tuple[CoxeterElement, ...]:
        """Every group element in BFS discovery order (identity first).

        Guarded: refuses when |W| exceeds the enumeration budget, so the big
        E-series tables are never materialized by accident."""
        cap = enumeration_budget(budget)
        if self.coxeter_order > cap:
            raise BudgetExceededError(
                f"|W({self.name})| = {self.coxeter_order} exceeds budget {cap}"
            )
        return self._all_elements_cached

    @functools.cached_property
    def _all_elements_cached(self) -> tuple[CoxeterElement, ...]:
        seen = {self.identity.signed}
        order = [self.identity]
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for s in self.atoms:
                    u = w * self.reflection(s)
                    if u.signed not in seen:
                        seen.add(u.signed)
                        order.append(u)
                        nxt.append(u)
            frontier = nxt
        return tuple(order)

    def __repr__(self):
        return f"ArtinSystem({self.name})"


# ---------------------------------------------------------------------------
# Parsing and classification.

_SPEC_RE = re.compile(r"^\s*([A-IH])\s*(\d+)\s*$|^\s*I2\s*\(\s*(\d+)\s*\)\s*$", re.X)


def _canonical_name(family: str, rank: int, m: int = 0) -> str:
    if family == "I2":
        return f"I2({m})"
    return f"{family}{rank}"


def _normalize_spec(family: str, rank: int, m: int) -> tuple[str, int, int]:
    """Resolve aliases so each isomorphism class has one canonical label.

    Rank-2 overlaps resolve to A2 (m=3) and I2(m) otherwise, with B2 an
    alias of I2(4); D3 is an alias of A3."""
    if family == "A" and rank == 2:
        return "A", 2, 0
    if family == "I2":
        if m == 3:
            return "A", 2, 0
        return "I2", 2, m
    if family == "B" and rank == 2:
        return "I2", 2, 4
    if family == "D" and rank == 3:
        return "A", 3, 0
    return family, rank, m


def _validate_spec(family: str, rank: int, m: int):
    ok = (
        (family == "A" and rank >= 1)
        or (family == "B" and rank >= 2)
        or (family == "D" and rank >= 3)
        or (family == "E" and rank in (6, 7, 8))
        or (family == "F" and rank == 4)
        or (family == "H" and rank in (3, 4))
        or (family == "I2" and m >= 3)
    )
    if not ok:
        raise UnknownSystemError(
            f"rank out of range for family {family}: {_canonical_name(family, rank, m)}"
        )


def parse_system(spec: str) -> ArtinSystem:
    """Parse a type string such as ``A3``, ``B4`` or ``I2(7)``.

    Accepted aliases: B2 -> I2(4), I2(3) -> A2, D3 -> A3.
    """
    match = _SPEC_RE.match(spec)
    if not match:
        raise UnknownSystemError(f"cannot parse system spec {spec!r}")
    if match.group(3) is not None:
        family, rank, m = "I2", 2, int(match.group(3))
    else:
        family, rank, m = match.group(1), int(match.group(2)), 0
        if family == "I":
            raise UnknownSystemError(f"cannot parse system spec {spec!r}")
    _validate_spec(family, rank, m)
    family, rank, m = _normalize_spec(family, rank, m)
    return _system_by_name(_canonical_name(family, rank, m))


@functools.lru_cache(maxsize=None)
def _system_by_name(name: str) -> ArtinSystem:
    match = _SPEC_RE.match(name)
    if match.group(3) is not None:
        family, rank, m = "I2", 2, int(match.group(3))
    else:
        family, rank, m = match.group(1), int(match.group(2)), 0
    matrix = _matrix_from_edges(rank, _catalog_edges(family, rank, m))
    roots = _build_root_model(family, rank, m)
    system = ArtinSystem(
        name=name, family=family, rank=rank, m_label=m, matrix=matrix, roots=roots
    )
    if system.w0.length != roots.n_roots:
        raise NotSphericalError("positive-root count disagrees with the longest element")
    return system


def classify(matrix: CoxeterMatrix) -> str:
    """Identify the family of a well-formed matrix, up to atom relabelling.

    Rejects disconnected (reducible) graphs and anything outside the
    spherical catalog."""
    name, _ = classify_with_map(matrix)
    return name


def classify_with_map(matrix: CoxeterMatrix) -> tuple[str, dict[int, int]]:
    """Like :func:`classify` but also returns the relabelling
    ``{original atom: canonical atom}`` onto the catalog matrix."""
    atoms = list(matrix.atoms)
    n = len(atoms)
    if n == 1:
        return "A1", {atoms[0]: 1}

    adj = {a: [] for a in atoms}
    edges = {}
    for i, a in enumerate(atoms):
        for j in range(i + 1, n):
            b = atoms[j]
            m = matrix.entries[i][j]
            if m >= 3:
                adj[a].append(b)
                adj[b].append(a)
                edges[frozenset((a, b))] = m

    # connectivity
    seen = {atoms[0]}
    stack = [atoms[0]]
    while stack:
        for b in adj[stack.pop()]:
            if b not in seen:
                seen.add(b)
                stack.append(b)
    if len(seen) != n:
        raise ReducibleSystemError("irreducible required: Coxeter graph is disconnected")
    if len(edges) != n - 1:
        raise NotSphericalError("not of finite type: Coxeter graph contains a cycle")

    heavy = {e: m for e, m in edges.items() if m > 3}
    degrees = {a: len(adj[a]) for a in atoms}
    branch = [a for a in atoms if degrees[a] >= 3]

    if n == 2:
        m = next(iter(edges.values()))
        lo, hi = sorted(atoms)
        mapping = {lo: 1, hi: 2}
        return ("A2", mapping) if m == 3 else (f"I2({m})", mapping)

    if len(branch) > 1 or any(degrees[a] > 3 for a in atoms):
        raise NotSphericalError("not of finite type: branching too wild")

    if branch:
        if heavy:
            raise NotSphericalError("not of finite type: weighted edge on a branched graph")
        return _classify_branched(atoms, adj, branch[0])

    # path graph; orient it
    ends = sorted(a for a in atoms if degrees[a] == 1)
    path = _walk_path(adj, ends[0])
    if len(heavy) > 1:
        raise NotSphericalError("not of finite type: several weighted edges")
    if not heavy:
        return f"A{n}", _path_map(path)
    (edge, m), = heavy.items()
    pos = [i for i in range(n - 1) if frozenset((path[i], path[i + 1])) == edge][0]
    at_start, at_end = pos == 0, pos == n - 2
    if m == 4:
        if at_start or at_end:
            return f"B{n}", _path_map(path if at_start else path[::-1])
        if n == 4 and pos == 1:
            return "F4", _path_map(min(path, path[::-1]))
        raise NotSphericalError("not of finite type: misplaced weight-4 edge")
    if m == 5 and n in (3, 4) and (at_start or at_end):
        return f"H{n}", _path_map(path if at_start else path[::-1])
    raise NotSphericalError(f"not of finite type: weight-{m} edge at rank {n}")


def _walk_path(adj, start):
    path = [start]
    prev = None
    cur = start
    while True:
        nxt = [b for b in adj[cur] if b != prev]
        if not nxt:
            return path
        prev, cur = cur, nxt[0]
        path.append(cur)


def _path_map(path) -> dict[int, int]:
    return {a: i + 1 for i, a in enumerate(path)}


def _classify_branched(atoms, adj, center):
    n = len(atoms)
    arms = []
    for first in sorted(adj[center]):
        arm = [first]
        prev = center
        while True:
            nxt = [b for b in adj[arm[-1]] if b != prev]
            if not nxt:
                break
            prev = arm[-1]
            arm.append(nxt[0])
        arms.append(arm)
    if len(arms) != 3:
        raise NotSphericalError("not of finite type")
    arms.sort(key=lambda a: (len(a), a))
    lens = sorted(len(a) for a in arms)
    short, mid, long = arms
    mapping = {center: 0}
    if lens[0] != 1:
        raise NotSphericalError("not of finite type: no length-1 arm")
    if lens[1] == 1:  # D_n: two length-1 arms, center is atom n-2
        name = f"D{n}"
        mapping = {center: n - 2}
        tips = sorted([short[0], mid[0]])
        mapping[tips[0]] = n - 1
        mapping[tips[1]] = n
        for i, a in enumerate(long):  # adjacent to center is n-3, tip is 1
            mapping[a] = n - 3 - i
        if any(v < 1 for v in mapping.values()):
            raise NotSphericalError("not of finite type")
        return name, mapping
    if lens[1] == 2 and lens[2] in (2, 3, 4):
        name = f"E{lens[2] + 4}"
        if n != lens[2] + 4:
            raise NotSphericalError("not of finite type")
        mapping = {center: 3, short[0]: n}
        mapping[mid[0]] = 2
        mapping[mid[1]] = 1
        for i, a in enumerate(long):
            mapping[a] = 4 + i
        return name, mapping
    raise NotSphericalError("not of finite type: arm lengths " + str(lens))


def system_from_matrix(matrix: CoxeterMatrix) -> ArtinSystem:
    """Classify a raw matrix and return the canonical system it names."""
    return _system_by_name(classify(matrix))
