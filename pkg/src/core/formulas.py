"""
Closed-form predictions about t-graphs.

Each function returns a Prediction (or a list of them) for concrete
parameters. Nothing here consults a graph; the harness does the comparing.
"""

from typing import List, Sequence, Tuple

from ..models.claim_models import Prediction, Structure
from ..models.errors import InvalidParameterError
from ..models.group_models import GeneratorBounds, NamedGroup
from .presentation import bounds_of


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InvalidParameterError(message)


def _check_pair(m: int, n: int) -> None:
    _require(m >= 2 and n >= 2, f"m and n must be >= 2, got ({m}, {n})")


def _check_t(t: int) -> None:
    _require(t >= 1, f"t must be >= 1, got {t}")


def _structure(*descriptors: Tuple[str, int]) -> Structure:
    return tuple(sorted(descriptors))


def _params(**values: int) -> Tuple[Tuple[str, int], ...]:
    return tuple(values.items())


def threshold_general(m: int, n: int) -> int:
    """⌈(m + n − 2) / 2⌉, the end of the parity regime for bounds (m, n)."""
    _check_pair(m, n)
    return (m + n - 1) // 2


def threshold_dihedral(n: int) -> int:
    """r = ⌈n / 2⌉ for bounds (2, n)."""
    _require(n >= 2, f"n must be >= 2, got {n}")
    return (n + 1) // 2


def threshold_ngen(bounds: GeneratorBounds) -> int:
    """⌈Σ(e_i − 1) / 2⌉."""
    return (sum(e - 1 for e in bounds.bounds) + 1) // 2


def predict_components_2gen(m: int, n: int, t: int) -> Prediction:
    """
    Parity rule for two generators.

    Up to the general threshold, even t gives two components and odd t gives a
    connected graph.
    """
    _check_pair(m, n)
    _check_t(t)
    params = dict(m=m, n=n, t=t)
    threshold = threshold_general(m, n)
    if t > threshold:
        return Prediction.not_applicable("T2", f"t > {threshold}", **params)
    if t % 2 == 0:
        return Prediction("T2.even", _params(**params), k=2)
    return Prediction("T2.odd", _params(**params), k=1)


def predict_components_ngen(bounds: GeneratorBounds, t: int) -> Prediction:
    """The same parity rule for any number of generators >= 2."""
    _require(bounds.rank >= 2, f"Parity rule needs >= 2 generators, got {bounds.rank}")
    _check_t(t)
    params = {f"e{i + 1}": e for i, e in enumerate(bounds.bounds)}
    params["t"] = t
    threshold = threshold_ngen(bounds)
    if t > threshold:
        return Prediction.not_applicable("parity", f"t > {threshold}", **params)
    claim = "parity.even" if t % 2 == 0 else "parity.odd"
    return Prediction(claim, _params(**params), k=2 if t % 2 == 0 else 1)


def predict_components_cyclic(m: int, t: int) -> Prediction:
    """k = t for t < m; every vertex is isolated from t = m on."""
    _require(m >= 2, f"m must be >= 2, got {m}")
    _check_t(t)
    return Prediction("cyclic", _params(m=m, t=t), k=t if t <= m - 1 else m)


def predict_cyclic_subgroup(m: int, t: int) -> Prediction:
    """For t | m the multiples of t make up exactly one component, of size m/t."""
    _require(m >= 2, f"m must be >= 2, got {m}")
    _check_t(t)
    if m % t != 0:
        return Prediction.not_applicable("subgroup", f"{t} does not divide {m}", m=m, t=t)
    return Prediction("subgroup", _params(m=m, t=t), extra=(("subgroup_size", m // t),))


def predict_grid(bounds: GeneratorBounds) -> Prediction:
    """
    The 1-graph is the Cartesian product of paths P(e_1) x ... x P(e_k).

    Connected, bipartite, with Σ_i (e_i − 1) Π_{j≠i} e_j edges.
    """
    order = bounds.order
    edges = sum((e - 1) * (order // e) for e in bounds.bounds)
    params = {f"e{i + 1}": e for i, e in enumerate(bounds.bounds)}
    params["t"] = 1
    return Prediction("grid", _params(**params), k=1, edges=edges, bipartite=True)


def predict_bipartite(m: int, n: int, t: int) -> Prediction:
    """Odd t up to the general threshold gives a bipartite graph."""
    _check_pair(m, n)
    _check_t(t)
    threshold = threshold_general(m, n)
    if t % 2 == 0 or t > threshold:
        return Prediction.not_applicable("T6", "t even or past the threshold", m=m, n=n, t=t)
    return Prediction("T6", _params(m=m, n=n, t=t), bipartite=True)


def predict_one_graph_dihedral(n: int) -> Prediction:
    """The 1-graph on bounds (2, n) is bipartite."""
    _require(n >= 2, f"n must be >= 2, got {n}")
    return Prediction("E2", _params(n=n, t=1), bipartite=True)


def predict_isolated_free(m: int, n: int, t: int) -> Prediction:
    """
    No isolated vertices exactly when t <= ⌈(m + n − 2) / 2⌉.

    Known to fail in the "only if" direction, e.g. at (2, 4, 3).
    """
    _check_pair(m, n)
    _check_t(t)
    free = t <= threshold_general(m, n)
    return Prediction("isolated-lemma", _params(m=m, n=n, t=t), isolated_free=free)


def predict_edges_dihedral(n: int, t: int) -> Prediction:
    """|E| = 3n − 2 at t = 1 and 4(n − t) + 2 for 2 <= t <= n."""
    _require(n >= 2, f"n must be >= 2, got {n}")
    _check_t(t)
    if t > n:
        return Prediction.not_applicable("L-edges", f"t > n = {n}", n=n, t=t)
    edges = 3 * n - 2 if t == 1 else 4 * (n - t) + 2
    return Prediction("L-edges", _params(n=n, t=t), edges=edges)


def predict_isolated_count_dihedral(n: int, t: int) -> Prediction:
    """Isolated vertices past r: 2n − 4(n − t) − 4."""
    _require(n >= 2, f"n must be >= 2, got {n}")
    _check_t(t)
    r = threshold_dihedral(n)
    if not r < t <= n:
        return Prediction.not_applicable("T5.isolated", f"t outside ({r}, {n}]", n=n, t=t)
    return Prediction("T5.isolated", _params(n=n, t=t), isolated=2 * n - 4 * (n - t) - 4)


def predict_components_dihedral(n: int, t: int) -> Prediction:
    """
    Component count and shape on bounds (2, n).

    Args:
        n (int): Second bound, >= 2.
        t (int): Distance, 1 <= t <= n.

    Returns:
        Prediction: case1 (t <= r even) two isomorphic components; case2
        (t <= r odd) connected; case3 (t = r + s) two isomorphic paths of
        2(n − t) + 2 vertices plus isolated vertices, k = 4(s − 1) + 2 for
        even n and 4s for odd n.
    """
    _require(n >= 2, f"n must be >= 2, got {n}")
    _check_t(t)
    params = _params(n=n, t=t)
    if t > n:
        return Prediction.not_applicable("T5", f"t > n = {n}", n=n, t=t)
    r = threshold_dihedral(n)
    if t <= r:
        if t % 2 == 0:
            return Prediction("T5.case1", params, k=2, isomorphic=True)
        return Prediction("T5.case2", params, k=1)
    s = t - r
    k = 4 * (s - 1) + 2 if n % 2 == 0 else 4 * s
    path = ("path", 2 * (n - t) + 2)
    return Prediction(
        "T5.case3",
        params,
        k=k,
        structure=_structure(path, path),
        isolated=2 * n - 4 * (n - t) - 4,
        isomorphic=True,
    )


def predict_cycle_structure(n: int, t: int) -> Prediction:
    """Odd n >= 5 at t = (n + 1)/2: one 2n-cycle for odd t, two n-cycles for even t."""
    _require(n >= 2, f"n must be >= 2, got {n}")
    _check_t(t)
    if n % 2 == 0 or n < 5 or 2 * t != n + 1:
        return Prediction.not_applicable("T7", "needs odd n >= 5 and t = (n+1)/2", n=n, t=t)
    params = _params(n=n, t=t)
    if t % 2 == 1:
        return Prediction("T7.odd", params, k=1, structure=_structure(("cycle", 2 * n)), chi=2)
    return Prediction(
        "T7.even",
        params,
        k=2,
        structure=_structure(("cycle", n), ("cycle", n)),
        chi=3,
    )


def predict_isomorphic_paths(n: int, t: int) -> Prediction:
    """Even n at t = n/2 + 1: two isomorphic paths of n vertices each."""
    _require(n >= 2, f"n must be >= 2, got {n}")
    _check_t(t)
    if n % 2 == 1 or 2 * (t - 1) != n:
        return Prediction.not_applicable("C-paths", "needs even n and t = n/2 + 1", n=n, t=t)
    return Prediction(
        "C-paths",
        _params(n=n, t=t),
        k=2,
        structure=_structure(("path", n), ("path", n)),
        isomorphic=True,
    )


def predict_ngraph(n: int, t: int) -> Prediction:
    """t = n: 2(n − 1) components, two of them Path(2), the rest isolated."""
    _require(n >= 2, f"n must be >= 2, got {n}")
    _check_t(t)
    if t != n:
        return Prediction.not_applicable("C-ngraph", "needs t = n", n=n, t=t)
    return Prediction(
        "C-ngraph",
        _params(n=n, t=t),
        k=2 * (n - 1),
        structure=_structure(("path", 2), ("path", 2)),
        isolated=2 * n - 4,
    )


def predict_two_chromatic(n: int, t: int) -> Prediction:
    """χ = 2 for odd t <= r and for r < t <= n."""
    _require(n >= 2, f"n must be >= 2, got {n}")
    _check_t(t)
    r = threshold_dihedral(n)
    if t > n or (t <= r and t % 2 == 0):
        return Prediction.not_applicable("C-2chromatic", "even t <= r or t > n", n=n, t=t)
    return Prediction("C-2chromatic", _params(n=n, t=t), chi=2)


def predict_structure_corollaries(n: int, t: int) -> List[Prediction]:
    """Every structural corollary that applies at (n, t); possibly none."""
    candidates = (
        predict_cycle_structure(n, t),
        predict_isomorphic_paths(n, t),
        predict_ngraph(n, t),
        predict_two_chromatic(n, t),
    )
    return [p for p in candidates if p.applicable]


def predict_oracle(bounds: GeneratorBounds, t: int) -> Prediction:
    """Laplacian nullity equals the number of components."""
    _check_t(t)
    params = {f"e{i + 1}": e for i, e in enumerate(bounds.bounds)}
    params["t"] = t
    return Prediction("T1", _params(**params), extra=(("nullity_matches_k", True),))


def predict_bounds_equality(groups: Sequence[NamedGroup], t: int) -> Prediction:
    """Named groups written with the same bounds have identical t-graphs."""
    _check_t(t)
    _require(len(groups) >= 2, "Need at least two groups to compare")
    shared = {bounds_of(g).bounds for g in groups}
    tags = "/".join(g.to_tag() for g in groups)
    if len(shared) != 1:
        return Prediction.not_applicable("bounds-equality", f"{tags} differ in bounds", t=t)
    return Prediction(
        "bounds-equality",
        _params(t=t),
        reason=tags,
        extra=(("identical", True),),
    )

