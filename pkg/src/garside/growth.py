"""Growth with respect to the Garside generators.

The left-weighted normal-form automaton has the proper simples as states and
allows s -> t exactly when s.t is left-weighted, i.e. L(t) is contained in
R(s).  Its length-r walks are in bijection with the positive elements of
infimum 0 and canonical length r, so exact ball counts reduce to integer
vector iteration and growth rates to the spectral radius of the transition
matrix.  Since the transition predicate only depends on the descent-set pair
of a state, all linear algebra is done on descent classes (at most 4^rank of
them), never on a states x states matrix.

Ball counts over the Garside generating set S (simples, Delta included):

- positive monoid: |g|_S = sup(g), so beta+(n) counts pairs (k >= 0, walk)
  with k + r <= n,
- group: |g|_{S u S^-1} = max(sup, 0) - min(inf, 0), a formula adopted here
  and validated against breadth-first search oracles.

Counts are exact big integers; rates are floating point with convergence
diagnostics.  The free-product machinery at the bottom turns a growth lower
bound alpha and a complement of Garside length k into the improved bound
1/gamma, gamma the positive root of 1 - alpha x - x^k.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

from .coxeter import ArtinSystem, CoxeterElement
from .errors import BudgetExceededError, PreconditionError
from .garside import GroupElement
from .parabolic import subsystem_components
from .util import enumeration_budget


@dataclass(frozen=True, eq=False)
class NormalFormAutomaton:
    system: ArtinSystem
    states: tuple[CoxeterElement, ...]
    left_sets: tuple[frozenset, ...]
    right_sets: tuple[frozenset, ...]
    _follows_cache: dict = field(default_factory=dict, repr=False)

    @property
    def n_states(self) -> int:
        return len(self.states)

    @functools.cached_property
    def _r_groups(self) -> dict[frozenset, list[int]]:
        groups: dict[frozenset, list[int]] = {}
        for idx, r in enumerate(self.right_sets):
            groups.setdefault(r, []).append(idx)
        return groups

    @functools.cached_property
    def _l_groups(self) -> dict[frozenset, list[int]]:
        groups: dict[frozenset, list[int]] = {}
        for idx, l in enumerate(self.left_sets):
            groups.setdefault(l, []).append(idx)
        return groups

    def _advance(self, vec: list):
        """One transition step on a per-state vector (exact or float)."""
        r_sums = {rset: sum(vec[i] for i in idxs) for rset, idxs in self._r_groups.items()}
        incoming = {
            lset: sum(s for rset, s in r_sums.items() if lset <= rset)
            for lset in self._l_groups
        }
        return [incoming[self.left_sets[i]] for i in range(self.n_states)]

    def counts(self, r_max: int) -> list[int]:
        """c_0..c_{r_max}: exact counts of length-r accepted sequences."""
        out = [1]
        if r_max == 0:
            return out
        vec = [1] * self.n_states
        out.append(sum(vec))
        for _ in range(2, r_max + 1):
            vec = self._advance(vec)
            out.append(sum(vec))
        return out[: r_max + 1]

    def follows(self, idx: int) -> tuple[int, ...]:
        """State indices t with idx -> t allowed."""
        rset = self.right_sets[idx]
        cached = self._follows_cache.get(rset)
        if cached is None:
            cached = tuple(
                i for lset, idxs in sorted(self._l_groups.items(), key=lambda kv: sorted(kv[0]))
                if lset <= rset for i in idxs
            )
            cached = tuple(sorted(cached))
            self._follows_cache[rset] = cached
        return cached

    def normal_words(self, length: int):
        """All left-weighted factor tuples of the given length, in state order."""
        if length == 0:
            yield ()
            return
        stack: list[CoxeterElement] = []

        def rec(prev: int | None):
            if len(stack) == length:
                yield tuple(stack)
                return
            indices = range(self.n_states) if prev is None else self.follows(prev)
            for i in indices:
                stack.append(self.states[i])
                yield from rec(i)
                stack.pop()

        yield from rec(None)

    def spectral_radius(self, tol: float = 1e-12, max_iter: int = 100_000):
        """Power iteration from the all-ones vector; returns
        (rate, iterations, converged, last_delta)."""
        if self.n_states == 0:
            return 1.0, 0, True, 0.0
        vec = [1.0] * self.n_states
        est = float(self.n_states)
        for it in range(1, max_iter + 1):
            total = sum(vec)
            vec = [v / total for v in vec]
            vec = self._advance(vec)
            new_est = sum(vec)
            delta = abs(new_est - est)
            est = new_est
            if delta <= tol * max(1.0, abs(est)):
                return est, it, True, delta
        return est, max_iter, False, delta


def build_automaton(system: ArtinSystem, budget: int | None = None) -> NormalFormAutomaton:
    """States are the proper simples in group-enumeration order; guarded by
    the enumeration budget since the state count is |W| - 2."""
    elements = system.all_elements(budget)
    states = tuple(w for w in elements if not w.is_identity and not w.is_longest)
    return NormalFormAutomaton(
        system=system,
        states=states,
        left_sets=tuple(w.left_descents for w in states),
        right_sets=tuple(w.right_descents for w in states),
    )


@functools.lru_cache(maxsize=None)
def _automaton_cached(system: ArtinSystem) -> NormalFormAutomaton:
    return build_automaton(system)


def count_monoid_ball(system: ArtinSystem, n: int) -> int:
    """Number of positive elements with sup <= n."""
    if n < 0:
        raise PreconditionError("horizon must be nonnegative")
    c = _automaton_cached(system).counts(n)
    return sum((n - r + 1) * c[r] for r in range(n + 1))


def count_group_ball(system: ArtinSystem, n: int) -> int:
    """Number of group elements with Garside geodesic length <= n: a normal
    form Delta^k s_1..s_r contributes at every k with
    max(k+r, 0) - min(k, 0) <= n, which is 2n - r + 1 values of k."""
    if n < 0:
        raise PreconditionError("horizon must be nonnegative")
    c = _automaton_cached(system).counts(n)
    return sum((2 * n - r + 1) * c[r] for r in range(n + 1))


def growth_rate(system: ArtinSystem, mode: str = "monoid") -> float:
    """Spectral radius of the normal-form automaton (monoid and group ball
    growth share it up to polynomial factors)."""
    if mode not in ("monoid", "group"):
        raise ValueError(f"mode must be 'monoid' or 'group', got {mode!r}")
    if system.rank == 1:
        return 1.0
    rate, _, converged, delta = _automaton_cached(system).spectral_radius()
    if not converged:
        raise PreconditionError(f"power iteration failed to converge (delta={delta})")
    return rate


def compare_parabolic(system: ArtinSystem, X) -> tuple[float, float, bool]:
    """(rate of A_X, rate of A, strict gap) where the subgroup rate is taken
    over the ambient Garside generators.  The isometric embedding reduces a
    connected X to its own catalog system; for disconnected X the parabolic
    is a direct product whose geodesic length is the max over components, so
    ball counts and hence rates multiply."""
    X = frozenset(X)
    if X == set(system.atoms):
        raise PreconditionError("X must be a proper subset")
    rate_x = 1.0
    for comp in subsystem_components(system, X):
        rate_x *= growth_rate(comp.child)
    rate_a = growth_rate(system)
    return rate_x, rate_a, rate_x < rate_a - 1e-9


# ---------------------------------------------------------------------------
# Breadth-first oracles.

_BFS_W_CAP = 200


def _generators(system: ArtinSystem, generators: str, mode: str) -> list[GroupElement]:
    if generators == "atoms":
        gens = [GroupElement.atom(system, i) for i in system.atoms]
    elif generators == "garside":
        gens = [
            GroupElement.lift(w)
            for w in system.all_elements()
            if not w.is_identity
        ]
    else:
        raise ValueError(f"generators must be 'atoms' or 'garside', got {generators!r}")
    if mode == "group":
        gens = gens + [g.inv() for g in gens]
    return gens


def bfs_oracle(
    system: ArtinSystem,
    generators: str = "garside",
    n: int = 3,
    mode: str = "group",
    budget: int | None = None,
) -> list[int]:
    """Exact ball counts [beta(0), ..., beta(n)] by breadth-first search over
    canonical forms.  Deliberately small: |W| and the ball size are capped."""
    if mode not in ("group", "monoid"):
        raise ValueError(f"mode must be 'group' or 'monoid', got {mode!r}")
    if system.coxeter_order > _BFS_W_CAP or n > 5:
        raise BudgetExceededError(
            f"bfs oracle is limited to |W| <= {_BFS_W_CAP} and n <= 5"
        )
    cap = enumeration_budget(budget)
    gens = _generators(system, generators, mode)
    seen = {GroupElement.identity(system)}
    frontier = list(seen)
    counts = [1]
    for _ in range(n):
        nxt = []
        for g in frontier:
            for h in gens:
                out = g * h
                if out not in seen:
                    seen.add(out)
                    nxt.append(out)
                    if len(seen) > cap:
                        raise BudgetExceededError("bfs ball exceeded the enumeration budget")
        frontier = nxt
        counts.append(len(seen))
    return counts


def group_ball_elements(
    system: ArtinSystem, n: int, budget: int | None = None
) -> tuple[GroupElement, ...]:
    """All elements of Garside geodesic length <= n, BFS order (deterministic)."""
    if budget is None:
        return _group_ball_cached(system, n)
    return _group_ball_impl(system, n, enumeration_budget(budget))


@functools.lru_cache(maxsize=None)
def _group_ball_cached(system: ArtinSystem, n: int) -> tuple[GroupElement, ...]:
    return _group_ball_impl(system, n, enumeration_budget(None))


def _group_ball_impl(system: ArtinSystem, n: int, cap: int) -> tuple[GroupElement, ...]:
    gens = _generators(system, "garside", "group")
    seen = {GroupElement.identity(system)}
    order = [GroupElement.identity(system)]
    frontier = list(order)
    for _ in range(n):
        nxt = []
        for g in frontier:
            for h in gens:
                out = g * h
                if out not in seen:
                    seen.add(out)
                    order.append(out)
                    nxt.append(out)
                    if len(seen) > cap:
                        raise BudgetExceededError("ball exceeded the enumeration budget")
        frontier = nxt
    return tuple(order)


# ---------------------------------------------------------------------------
# Free-product lower bounds.


@dataclass(frozen=True)
class FreeProductBound:
    alpha: float
    k: int
    gamma: float
    bound: float

    def residual(self) -> float:
        return abs(1.0 - self.alpha * self.gamma - self.gamma**self.k)

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "k": self.k,
            "gamma": self.gamma,
            "bound": self.bound,
            "residual": self.residual(),
        }


def free_product_bound(alpha: float, k: int) -> FreeProductBound:
    """gamma is the positive root of 1 - alpha x - x^k (unique in (0, 1/alpha])
    and 1/gamma > alpha improves the bound strictly.  k = 1 is closed-form;
    otherwise bisection to absolute tolerance 1e-12."""
    if alpha < 1 or k < 1:
        raise PreconditionError("need alpha >= 1 and k >= 1")
    if k == 1:
        gamma = 1.0 / (alpha + 1.0)
        return FreeProductBound(alpha=alpha, k=k, gamma=gamma, bound=alpha + 1.0)
    lo, hi = 0.0, 1.0 / alpha
    while hi - lo > 1e-12:
        mid = (lo + hi) / 2.0
        if 1.0 - alpha * mid - mid**k > 0.0:
            lo = mid
        else:
            hi = mid
    gamma = (lo + hi) / 2.0
    return FreeProductBound(alpha=alpha, k=k, gamma=gamma, bound=1.0 / gamma)


def diverging_sequence(k: int, steps: int) -> list[float]:
    """alpha_1 = 1, alpha_{i+1} = 1/gamma_i: strictly increasing, and
    divergent (slowly: increments are gamma_i^{k-1})."""
    if k < 1 or steps < 1:
        raise PreconditionError("need k >= 1 and steps >= 1")
    out = [1.0]
    while len(out) < steps:
        out.append(free_product_bound(out[-1], k).bound)
    return out


# ---------------------------------------------------------------------------
# Reports.


@dataclass(frozen=True)
class GrowthReport:
    system: str
    horizon: int
    mode: str
    monoid_counts: tuple[int, ...]
    group_counts: tuple[int, ...]
    rate: float
    diagnostics: dict

    def ratios(self) -> list[float | None]:
        src = self.group_counts if self.mode == "group" else self.monoid_counts
        return [None] + [src[i] / src[i - 1] for i in range(1, len(src))]

    def to_json(self) -> dict:
        return {
            "system": self.system,
            "horizon": self.horizon,
            "mode": self.mode,
            "monoid_counts": list(self.monoid_counts),
            "group_counts": list(self.group_counts),
            "rate": self.rate,
            "diagnostics": self.diagnostics,
        }

    def to_text(self) -> str:
        rows = [("n", "monoid", "group", "ratio")]
        ratios = self.ratios()
        for n in range(self.horizon + 1):
            ratio = "-" if ratios[n] is None else f"{ratios[n]:.6f}"
            rows.append((str(n), str(self.monoid_counts[n]), str(self.group_counts[n]), ratio))
        widths = [max(len(r[c]) for r in rows) for c in range(4)]
        lines = ["  ".join(cell.ljust(widths[c]) for c, cell in enumerate(row)).rstrip() for row in rows]
        lines.append(f"rate: {self.rate:.12f}")
        return "\n".join(lines) + "\n"


def growth_report(system: ArtinSystem, horizon: int, mode: str = "group") -> GrowthReport:
    monoid = tuple(count_monoid_ball(system, n) for n in range(horizon + 1))
    group = tuple(count_group_ball(system, n) for n in range(horizon + 1))
    if system.rank == 1:
        rate, iters, converged, delta = 1.0, 0, True, 0.0
    else:
        rate, iters, converged, delta = _automaton_cached(system).spectral_radius()
    return GrowthReport(
        system=system.name,
        horizon=horizon,
        mode=mode,
        monoid_counts=monoid,
        group_counts=group,
        rate=rate,
        diagnostics={"iterations": iters, "converged": converged, "last_delta": delta},
    )


def render_growth_figure(report: GrowthReport, path: str) -> None:
    """Ball counts (log scale) and step ratios against the spectral rate."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    ns = list(range(report.horizon + 1))
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(9, 3.6))
    ax1.semilogy(ns, report.monoid_counts, "o-", label="monoid ball")
    ax1.semilogy(ns, report.group_counts, "s-", label="group ball")
    ax1.set_xlabel("n")
    ax1.set_ylabel("ball size")
    ax1.set_title(f"{report.system}: Garside-generator balls")
    ax1.legend()
    ratios = report.ratios()
    ax2.plot(ns[1:], ratios[1:], "o-", label=f"{report.mode} ratio")
    ax2.axhline(report.rate, color="k", linestyle="--", label="spectral rate")
    ax2.set_xlabel("n")
    ax2.set_ylabel("beta(n)/beta(n-1)")
    ax2.set_title("per-step growth")
    ax2.legend()
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)
