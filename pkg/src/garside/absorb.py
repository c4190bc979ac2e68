"""Absorbable elements: certificates, constructive decompositions, and the
exact rank-2 classifier.

An element y is absorbable when inf(y) = 0 or sup(y) = 0 and some x satisfies
inf(xy) = inf(x) and sup(xy) = sup(x); we record such an x as a certificate
and re-verify it from canonical forms whenever it is consumed.

The decompositions implemented here are fully constructive and return
budget-checked factor lists with one verified certificate per factor:

- Delta^k       as at most 3 absorbable factors  [sigma_i^k, sigma_j^k, C]
                built from a commuting atom pair (i, j),
- Delta_X^k     as at most 2 factors for proper X,
- any element of a proper standard parabolic as at most 3,
- any conjugator of an X-supported positive element onto a positive element
  (and hence any normalizer of A_X) as at most 9.

Rank-2 systems have no commuting atoms and a tiny absorbable set instead:
in the dihedral group I2(m) exactly the alternating positive words of length
p < m - 1 and their inverses (A2 is the case m = 3).  ``bounded_search``
provides the semi-decision used everywhere else: it scans positive inf-0
absorbers by canonical length and never returns a false positive.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import ArtinSystem
from .errors import (
    MembershipError,
    NoCommutingPairError,
    NotNormalizingError,
    PreconditionError,
)
from .garside import GroupElement
from .parabolic import (
    central_delta_exponent,
    factor_conjugator,
    member,
    parabolic_normal_form,
    ribbon,
    sub_delta,
    support,
    tau_sub,
)


@dataclass(frozen=True)
class AbsorptionCertificate:
    """A pair witnessing that ``absorber`` absorbs ``absorbed``."""

    absorbed: GroupElement
    absorber: GroupElement
    recorded: tuple[int, int, int, int]  # inf(x), sup(x), inf(xy), sup(xy)

    @staticmethod
    def build(absorbed: GroupElement, absorber: GroupElement) -> "AbsorptionCertificate":
        prod = absorber * absorbed
        cert = AbsorptionCertificate(
            absorbed=absorbed,
            absorber=absorber,
            recorded=(absorber.inf, absorber.sup, prod.inf, prod.sup),
        )
        if not cert.verify():
            raise PreconditionError(
                f"constructed certificate does not verify: y={absorbed!r} x={absorber!r}"
            )
        return cert

    def verify(self) -> bool:
        return verify_certificate(self.absorbed, self.absorber)

    def inverse(self) -> "AbsorptionCertificate":
        """x absorbs y implies x*y absorbs y^{-1}."""
        return AbsorptionCertificate.build(self.absorbed.inv(), self.absorber * self.absorbed)

    def to_json(self) -> dict:
        return {
            "absorbed": self.absorbed.to_json(),
            "absorber": self.absorber.to_json(),
            "recorded": list(self.recorded),
        }


def verify_certificate(y: GroupElement, x: GroupElement) -> bool:
    """The two defining conditions, checked on canonical forms; no search."""
    if y.system is not x.system:
        return False
    if not (y.inf == 0 or y.sup == 0):
        return False
    prod = x * y
    return prod.inf == x.inf and prod.sup == x.sup


@dataclass(frozen=True)
class AbsorbableDecomposition:
    target: GroupElement
    factors: tuple[GroupElement, ...]
    certificates: tuple[AbsorptionCertificate, ...]
    budget: int

    def __post_init__(self):
        if len(self.factors) > self.budget:
            raise PreconditionError(
                f"{len(self.factors)} factors exceed the budget {self.budget}"
            )
        if len(self.factors) != len(self.certificates):
            raise PreconditionError("one certificate per factor required")

    def verify(self) -> bool:
        prod = GroupElement.identity(self.target.system)
        for f in self.factors:
            prod = prod * f
        if prod != self.target:
            return False
        return all(
            c.absorbed == f and c.verify() for f, c in zip(self.factors, self.certificates)
        )

    def to_json(self) -> dict:
        return {
            "target": self.target.to_json(),
            "factors": [f.to_json() for f in self.factors],
            "absorbers": [c.absorber.to_json() for c in self.certificates],
            "budget": self.budget,
        }


def _empty(system: ArtinSystem, budget: int) -> AbsorbableDecomposition:
    return AbsorbableDecomposition(GroupElement.identity(system), (), (), budget)


def _require_large(system: ArtinSystem):
    if system.rank < 3:
        raise NoCommutingPairError(
            f"{system.name} has no commuting atom pair; use the rank-2 classifier"
        )


def decompose_delta_power(system: ArtinSystem, k: int) -> AbsorbableDecomposition:
    """Delta^k = sigma_i^k . sigma_j^k . C with C = sigma_j^{-k} sigma_i^{-k}
    Delta^k over the first commuting pair (i, j); negative k by inverting and
    reversing the positive factorization."""
    _require_large(system)
    if k == 0:
        return _empty(system, 3)
    i, j = system.commuting_pairs[0]
    n = abs(k)
    a = GroupElement.atom(system, i) ** n
    b = GroupElement.atom(system, j) ** n
    c = b.inv() * a.inv() * GroupElement.delta_power(system, n)
    cert_a = AbsorptionCertificate.build(a, b)
    cert_b = AbsorptionCertificate.build(b, a)
    cert_c = AbsorptionCertificate.build(c, b)
    if k > 0:
        factors = (a, b, c)
        certs = (cert_a, cert_b, cert_c)
    else:
        factors = (c.inv(), b.inv(), a.inv())
        certs = (cert_c.inverse(), cert_b.inverse(), cert_a.inverse())
    return AbsorbableDecomposition(GroupElement.delta_power(system, k), factors, certs, 3)


def decompose_sub_delta_power(system: ArtinSystem, X, k: int) -> AbsorbableDecomposition:
    """Delta_X^k as at most two absorbable factors, X proper.

    Cases, in order: an outside atom commuting with all of X absorbs the
    whole power; a commuting pair touching X splits it in two; otherwise an
    alternating-ribbon absorber (the same shape as the parabolic-element
    absorber, with Delta_X itself as every factor) absorbs the whole power,
    available whenever X u {t} stays proper."""
    _require_large(system)
    X = frozenset(X)
    target = sub_delta(system, X) ** k
    if not X <= set(system.atoms) or X == set(system.atoms):
        raise PreconditionError(f"X must be a proper atom subset, got {sorted(X)}")
    if k == 0:
        return _empty(system, 2)

    outside = sorted(set(system.atoms) - X)
    commuting_outside = [
        j for j in outside if all(system.matrix.entry(j, s) == 2 for s in X)
    ]
    if commuting_outside:
        absorber = GroupElement.atom(system, commuting_outside[0]) ** k
        cert = AbsorptionCertificate.build(target, absorber)
        return AbsorbableDecomposition(target, (target,), (cert,), 2)

    pair = _commuting_pair_touching(system, X)
    if pair is not None:
        i, j = pair
        n = abs(k)
        a = GroupElement.atom(system, i) ** n
        b = a.inv() * sub_delta(system, X) ** n
        cert_a = AbsorptionCertificate.build(a, GroupElement.atom(system, j) ** n)
        cert_b = AbsorptionCertificate.build(b, a)
        if k > 0:
            factors, certs = (a, b), (cert_a, cert_b)
        else:
            factors, certs = (b.inv(), a.inv()), (cert_b.inverse(), cert_a.inverse())
        return AbsorbableDecomposition(target, factors, certs, 2)

    for t in outside:
        if X | {t} != set(system.atoms):
            absorber = _ribbon_absorber(system, X, t, abs(k))
            if k < 0:
                # x absorbs Delta_X^{|k|}; then x * Delta_X^{|k|} absorbs the
                # inverse, and that product is Delta_{X u t}^{|k|}.
                absorber = absorber * sub_delta(system, X) ** (-k)
            cert = AbsorptionCertificate.build(target, absorber)
            return AbsorbableDecomposition(target, (target,), (cert,), 2)

    raise NoCommutingPairError(
        f"no commuting pair or proper ribbon extension for X={sorted(X)} in {system.name}"
    )


def _commuting_pair_touching(system: ArtinSystem, X: frozenset):
    """First commuting pair with a member inside X, outside partner preferred."""
    best = None
    for i, j in system.commuting_pairs:
        in_i, in_j = i in X, j in X
        if not (in_i or in_j):
            continue
        if in_i != in_j:
            return (i, j) if in_i else (j, i)
        if best is None:
            best = (i, j)
    return best


def _ribbon_absorber(system: ArtinSystem, X: frozenset, t: int, l: int) -> GroupElement:
    """tau_{X u t}^{l-1}(r_{X,t}) ... tau_{X u t}(r_{X,t}) . r_{X,t}."""
    r = ribbon(system, X, t, side="right").value
    big = X | {t}
    acc = GroupElement.identity(system)
    for i in range(l - 1, -1, -1):
        acc = acc * tau_sub(r, big, i)
    return acc


def decompose_parabolic(x: GroupElement, X) -> AbsorbableDecomposition:
    """An element of a proper standard parabolic as at most 3 absorbable
    factors: its Delta_X power (at most 2) plus its positive part as a single
    factor absorbed by an outside commuting atom power or an alternating
    ribbon product."""
    system = x.system
    _require_large(system)
    X = frozenset(X)
    if X == set(system.atoms):
        raise PreconditionError("X must be a proper atom subset")
    if not member(x, X):
        raise MembershipError(f"element is not in the parabolic on {sorted(X)}")
    if x.is_identity:
        return _empty(system, 3)
    k, carriers = parabolic_normal_form(x, X)
    factors: list[GroupElement] = []
    certs: list[AbsorptionCertificate] = []
    if k != 0:
        dec = decompose_sub_delta_power(system, X, k)
        factors.extend(dec.factors)
        certs.extend(dec.certificates)
    if carriers:
        positive = GroupElement.identity(system)
        for c in carriers:
            positive = positive * GroupElement.lift(c)
        l = len(carriers)
        outside = sorted(set(system.atoms) - X)
        commuting_outside = [
            j for j in outside if all(system.matrix.entry(j, s) == 2 for s in X)
        ]
        if commuting_outside:
            absorber = GroupElement.atom(system, commuting_outside[0]) ** l
        else:
            t = min(
                t for t in outside if any(system.matrix.entry(t, s) >= 3 for s in X)
            )
            absorber = _ribbon_absorber(system, X, t, l)
        factors.append(positive)
        certs.append(AbsorptionCertificate.build(positive, absorber))
    out = AbsorbableDecomposition(x, tuple(factors), tuple(certs), 3)
    if not out.verify():
        raise PreconditionError("parabolic decomposition failed verification")
    return out


def decompose_positive_conjugator(u: GroupElement, x: GroupElement) -> AbsorbableDecomposition:
    """Any x with x^{-1} u x positive (u positive, supp(u) proper) as at most
    9 absorbable factors: Delta part, parabolic part, and ribbon part."""
    system = u.system
    _require_large(system)
    X = support(u)
    if X == set(system.atoms):
        raise PreconditionError("supp(u) must be a proper atom subset")
    if not (x.inv() * u * x).is_positive:
        raise PreconditionError("x does not conjugate u to a positive element")

    k = x.inf
    positive_part = GroupElement(system, 0, x.factors)
    u_shift = u.tau(k)
    alpha, chain = factor_conjugator(u_shift, positive_part)
    X1 = support(u_shift)
    m = len(chain.factors)

    # beta = Delta_{X1}^{-m} * beta' with beta' the product of the chain's
    # Delta_{X_i u t_i}; both computations must agree.
    beta_prime = GroupElement.identity(system)
    for f in chain.factors:
        beta_prime = beta_prime * sub_delta(system, f.source | {f.atom})
    if sub_delta(system, X1) ** m * chain.value() != beta_prime:
        raise PreconditionError("ribbon chain rewrite identity failed")

    q = beta_prime.inf
    gamma = GroupElement.delta_power(system, -q) * beta_prime
    Yp = frozenset(_tau_atoms(system, X1, q))

    factors: list[GroupElement] = []
    certs: list[AbsorptionCertificate] = []
    if k + q != 0:
        dec = decompose_delta_power(system, k + q)
        factors.extend(dec.factors)
        certs.extend(dec.certificates)
    a_part = alpha.tau(q)
    if not a_part.is_identity:
        dec = decompose_parabolic(a_part, Yp)
        factors.extend(dec.factors)
        certs.extend(dec.certificates)
    if m or q:
        if q != 0:
            dec = decompose_sub_delta_power(system, Yp, -q)
            factors.extend(dec.factors)
            certs.extend(dec.certificates)
        z = sub_delta(system, Yp) ** (q - m) * gamma
        if not z.is_identity:
            absorber = sub_delta(system, Yp) ** (m - q)
            factors.append(z)
            certs.append(AbsorptionCertificate.build(z, absorber))
    out = AbsorbableDecomposition(x, tuple(factors), tuple(certs), 9)
    if not out.verify():
        raise PreconditionError("conjugator decomposition failed verification")
    return out


def _tau_atoms(system: ArtinSystem, X: frozenset, power: int):
    if power % 2 == 0:
        return X
    w0 = system.w0
    out = set()
    for s in X:
        img = w0 * system.reflection(s) * w0
        out.update(t for t in system.atoms if system.reflection(t) == img)
    return out


def decompose_normalizer(alpha: GroupElement, X) -> AbsorbableDecomposition:
    """An element normalizing A_X (tested by commutation with the central
    power Delta_X^e) as at most 9 absorbable factors."""
    system = alpha.system
    _require_large(system)
    X = frozenset(X)
    if not X or X == set(system.atoms):
        raise PreconditionError("X must be a nonempty proper atom subset")
    e = central_delta_exponent(system, X)
    central = sub_delta(system, X) ** e
    if alpha.inv() * central * alpha != central:
        raise NotNormalizingError(
            f"element does not commute with Delta_X^{e}, so it does not normalize A_X"
        )
    return decompose_positive_conjugator(central, alpha)


# ---------------------------------------------------------------------------
# Rank <= 2: exact classifier.  Identity is excluded: it satisfies the
# definition vacuously but is never a useful absorbable (it connects nothing
# in the additional length graph).


def classify_absorbable_small(y: GroupElement) -> bool:
    """Exact absorbability for A1, A2 and I2(m): the alternating positive
    words of length p < m - 1 and their inverses (A2 is m = 3; A1 has none).
    """
    system = y.system
    if system.rank > 2:
        raise PreconditionError("exact classifier only covers rank <= 2; use bounded_search")
    if system.rank == 1:
        return False
    m = system.matrix.entry(1, 2)
    if y.sup == 0 and not y.is_identity:
        return classify_absorbable_small(y.inv())
    if y.inf == 0 and y.canonical_length == 1:
        return y.factors[0].length <= m - 2
    return False


def bounded_search(y: GroupElement, radius: int) -> AbsorptionCertificate | None:
    """Search positive inf-0 absorbers of canonical length <= radius, in
    normal-form enumeration order; a returned certificate always verifies,
    ``None`` means unknown."""
    if not (y.inf == 0 or y.sup == 0):
        raise PreconditionError("absorbable elements need inf = 0 or sup = 0")
    system = y.system
    if y.is_identity:
        return AbsorptionCertificate.build(y, GroupElement.identity(system))
    from .growth import build_automaton  # deferred: growth imports nothing from here

    automaton = build_automaton(system)
    for r in range(1, radius + 1):
        for factors in automaton.normal_words(r):
            x = GroupElement(system, 0, factors)
            if verify_certificate(y, x):
                return AbsorptionCertificate.build(y, x)
    return None
