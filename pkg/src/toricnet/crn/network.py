"""Structural analysis: rate matrix, linkage classes, deficiency, Cayley matrix.

Index convention: the rate matrix entry (k, l) holds the total rate of
reactions l -> k, so columns sum to zero and cdot = Y * A * Psi(c) is mass
action. Linkage classes are weakly connected components; weak reversibility
means every class is a single strong component.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import InputError, InternalError
from ..exactcore import SparsePoly, rank
from .parser import Network


def resolve_rate(rate, net: Network, bindings: dict | None):
    """Numeric value of one rate; user bindings win over inline ones."""
    if not isinstance(rate, str):
        return Fraction(rate)
    merged = dict(net.bindings)
    merged.update(bindings or {})
    if rate not in merged:
        raise InputError(f"unbound rate symbol {rate!r}")
    value = Fraction(merged[rate])
    if value <= 0:
        raise InputError(f"rate {rate!r} must be positive, got {value}")
    return value


def _rate_entry(rate, net: Network, bindings: dict | None, symbolic: bool):
    if symbolic:
        if isinstance(rate, str):
            return SparsePoly.variable(rate)
        return SparsePoly.const(Fraction(rate))
    return resolve_rate(rate, net, bindings)


def build_rate_matrix(net: Network, bindings: dict | None = None):
    """n x n rate matrix A with A[k][l] = rate(l -> k), columns summing to zero.

    With bindings (or an all-numeric network) entries are Fractions; without
    bindings and with symbolic rates present, entries are SparsePoly in the
    rate names. Parallel edges sum.
    """
    symbolic = bindings is None and any(isinstance(r.rate, str) for r in net.reactions)
    n = net.n_complexes
    zero = SparsePoly.zero() if symbolic else Fraction(0)
    a = [[zero for _ in range(n)] for _ in range(n)]
    for r in net.reactions:
        a[r.target][r.source] = a[r.target][r.source] + _rate_entry(
            r.rate, net, bindings, symbolic
        )
    for l in range(n):
        col = zero
        for k in range(n):
            if k != l:
                col = col + a[k][l]
        a[l][l] = -col
    return a


def _adjacency(net: Network) -> list[set]:
    out = [set() for _ in range(net.n_complexes)]
    for r in net.reactions:
        out[r.source].add(r.target)
    return out


def linkage_classes(net: Network) -> list[list[int]]:
    """Weakly connected components, each sorted, ordered by smallest member."""
    n = net.n_complexes
    neighbors = [set() for _ in range(n)]
    for r in net.reactions:
        neighbors[r.source].add(r.target)
        neighbors[r.target].add(r.source)
    seen = [False] * n
    classes = []
    for start in range(n):
        if seen[start]:
            continue
        stack, comp = [start], []
        seen[start] = True
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in neighbors[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        classes.append(sorted(comp))
    return classes


def strong_components(net: Network) -> list[list[int]]:
    """Strongly connected components (iterative Tarjan), sorted like above."""
    n = net.n_complexes
    out = _adjacency(net)
    index = [None] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0

    for root in range(n):
        if index[root] is not None:
            continue
        work = [(root, iter(sorted(out[root])))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if index[w] is None:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, iter(sorted(out[w]))))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                pv = work[-1][0]
                low[pv] = min(low[pv], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return sorted(comps, key=lambda c: c[0])


def is_weakly_reversible(net: Network) -> bool:
    return sorted(linkage_classes(net)) == sorted(strong_components(net))


def stoichiometric_matrix(net: Network) -> list[list[Fraction]]:
    """s x r matrix, one column Y_target - Y_source per reaction."""
    cols = []
    for r in net.reactions:
        src, tgt = net.complexes[r.source], net.complexes[r.target]
        cols.append([Fraction(t - s) for s, t in zip(src, tgt)])
    return [[cols[j][i] for j in range(len(cols))] for i in range(net.n_species)]


def stoichiometric_rank(net: Network) -> int:
    rows = []
    for r in net.reactions:
        src, tgt = net.complexes[r.source], net.complexes[r.target]
        rows.append([Fraction(t - s) for s, t in zip(src, tgt)])
    return rank(rows)


def cayley_matrix(net: Network) -> list[list[int]]:
    """(s + l) x n integer matrix: Y on top, linkage-class indicators below."""
    classes = linkage_classes(net)
    n = net.n_complexes
    top = [[net.complexes[col][row] for col in range(n)] for row in range(net.n_species)]
    bottom = []
    for cls in classes:
        bottom.append([1 if col in cls else 0 for col in range(n)])
    return top + bottom


@dataclass(frozen=True)
class NetworkAnalysis:
    linkage_classes: tuple
    strong_components: tuple
    weakly_reversible: bool
    stoich_rank: int
    deficiency: int
    cayley: tuple


def deficiency(net: Network) -> int:
    """delta = n - l - s', cross-checked against n - rank(Cayley)."""
    n = net.n_complexes
    l = len(linkage_classes(net))
    s_rank = stoichiometric_rank(net)
    delta = n - l - s_rank
    cay = cayley_matrix(net)
    delta_rank = n - rank([[Fraction(x) for x in row] for row in cay])
    if delta != delta_rank:
        raise InternalError(
            f"deficiency formulas disagree: n-l-s'={delta}, n-rank(Cayley)={delta_rank}"
        )
    return delta


def analyze(net: Network) -> NetworkAnalysis:
    return NetworkAnalysis(
        linkage_classes=tuple(tuple(c) for c in linkage_classes(net)),
        strong_components=tuple(tuple(c) for c in strong_components(net)),
        weakly_reversible=is_weakly_reversible(net),
        stoich_rank=stoichiometric_rank(net),
        deficiency=deficiency(net),
        cayley=tuple(tuple(row) for row in cayley_matrix(net)),
    )
