"""Labeled-weighted digraphs of matrix pairs, walks and their configurations.

``G(A, B)`` has an ``a``-arc ``i -> j`` of weight ``A[i, j]`` for every
non-zero entry of ``A`` and likewise a ``b``-arc for ``B``.  Nodes are
numbered from 0.  Exhaustive walk enumeration here is the semantic oracle
for matrix word evaluation; it is exact and refuses to run past its limit
rather than truncate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .matrix import DimensionError, Matrix
from .semiring import (
    GHOST_TAG,
    REAL_TAG,
    ZERO,
    SupertropScalar,
    TropScalar,
    format_scalar,
    parse_scalar,
    real,
)
from .words import Word

DEFAULT_WALK_LIMIT = 10**7

Scalar = TropScalar | SupertropScalar


class LimitExceeded(RuntimeError):
    pass


class MissingArc(KeyError):
    pass


class DigraphParseError(ValueError):
    pass


@dataclass(frozen=True)
class LwDigraph:
    n: int
    arcs: dict  # (i, j, label) -> non-zero weight

    def weight(self, i: int, j: int, label: str) -> Scalar:
        try:
            return self.arcs[(i, j, label)]
        except KeyError:
            raise MissingArc((i, j, label)) from None

    def out_arcs(self, i: int, label: str) -> list[tuple[int, Scalar]]:
        return [(j, self.arcs[(i, j, label)]) for j in range(self.n) if (i, j, label) in self.arcs]


@dataclass(frozen=True)
class Walk:
    start: int
    steps: tuple[tuple[int, str], ...]  # (head node, label) per arc

    def __post_init__(self):
        if not self.steps:
            raise ValueError("a walk has at least one arc")

    @property
    def end(self) -> int:
        return self.steps[-1][0]

    def arcs(self) -> Iterator[tuple[int, int, str]]:
        cur = self.start
        for nxt, label in self.steps:
            yield cur, nxt, label
            cur = nxt

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return str(self.start) + "".join(f" -{lab}-> {j}" for j, lab in self.steps)


def digraph_of(A: Matrix, B: Matrix) -> LwDigraph:
    if A.n != B.n:
        raise DimensionError(f"dimension mismatch: {A.n} vs {B.n}")
    arcs = {}
    for label, M in (("a", A), ("b", B)):
        for i, j, x in M.entries():
            if not x.is_zero:
                arcs[(i, j, label)] = x
    return LwDigraph(A.n, arcs)


def digraph_matrices(G: LwDigraph, kind: str = "st") -> tuple[Matrix, Matrix]:
    """The matrix pair whose lw-digraph is ``G``."""
    zero = ZERO if kind == "st" else TropScalar(None)
    mats = []
    for label in "ab":
        mats.append(Matrix([[G.arcs.get((i, j, label), zero) for j in range(G.n)] for i in range(G.n)]))
    return mats[0], mats[1]


def walk_weight(G: LwDigraph, walk: Walk) -> Scalar:
    arcs = list(walk.arcs())
    acc = G.weight(*arcs[0])
    for arc in arcs[1:]:
        acc = acc * G.weight(*arc)
    return acc


def walk_label(walk: Walk) -> Word:
    return Word("".join(label for _, label in walk.steps))


def config(walk: Walk, n: int) -> tuple[int, ...]:
    """Arc multiplicities, a-block then b-block, each row-major over ``(i, j)``."""
    vec = [0] * (2 * n * n)
    for i, j, label in walk.arcs():
        if not (0 <= i < n and 0 <= j < n):
            raise ValueError(f"node out of range in arc {i}->{j}")
        vec[(0 if label == "a" else n * n) + i * n + j] += 1
    return tuple(vec)


def _check_limit(n: int, length: int, limit: int) -> None:
    if n**length > limit:
        raise LimitExceeded(f"{n}^{length} walk prefixes exceed the enumeration limit {limit}")


def enumerate_walks(G: LwDigraph, w: Word, i: int, j: int, limit: int = DEFAULT_WALK_LIMIT) -> list[Walk]:
    """All walks from ``i`` to ``j`` labeled ``w``, in depth-first node order."""
    _check_limit(G.n, len(w), limit)
    letters = w.letters
    out: list[Walk] = []
    steps: list[tuple[int, str]] = []

    def dfs(cur: int, pos: int) -> None:
        if pos == len(letters):
            if cur == j:
                out.append(Walk(i, tuple(steps)))
            return
        label = letters[pos]
        for nxt in range(G.n):
            if (cur, nxt, label) in G.arcs:
                steps.append((nxt, label))
                dfs(nxt, pos + 1)
                steps.pop()

    dfs(i, 0)
    return out


def max_walk_value(G: LwDigraph, w: Word, i: int, j: int, limit: int = DEFAULT_WALK_LIMIT) -> Scalar:
    """Semiring sum of the weights of all walks ``i -> j`` labeled ``w``.

    Every walk is visited once, depth first, with its weight carried along
    the prefix; the sum is taken in the semiring, so ties produce ghosts.
    """
    _check_limit(G.n, len(w), limit)
    letters = w.letters
    L = len(letters)
    adj = {c: [G.out_arcs(k, c) for k in range(G.n)] for c in "ab"}
    total = [None]

    def dfs(cur: int, pos: int, weight) -> None:
        if pos == L:
            if cur == j:
                total[0] = weight if total[0] is None else total[0] + weight
            return
        for nxt, x in adj[letters[pos]][cur]:
            dfs(nxt, pos + 1, x if weight is None else weight * x)

    dfs(i, 0, None)
    return _zero_like(G) if total[0] is None else total[0]


def _magnitude(x: Scalar):
    return x.value if isinstance(x, TropScalar) else x.mag


def enumerate_best_walks(G: LwDigraph, w: Word, i: int, j: int) -> tuple[object, list[Walk]]:
    """All walks ``i -> j`` labeled ``w`` of the highest nu-weight.

    Returns ``(best magnitude, walks)``, or ``(None, [])`` when there is no
    walk.  A backward pass records the best completion from every
    (position, node); the forward search only follows arcs that still
    reach the optimum, so exactly the optimal walks are produced, in the
    same order as :func:`enumerate_walks`.
    """
    L = len(w)
    suffix: list[list[object]] = [[None] * G.n for _ in range(L + 1)]
    suffix[L][j] = 0
    for pos in range(L - 1, -1, -1):
        label = w.letters[pos]
        for k in range(G.n):
            best = None
            for l, x in G.out_arcs(k, label):
                rest = suffix[pos + 1][l]
                if rest is None:
                    continue
                cand = _magnitude(x) + rest
                if best is None or cand > best:
                    best = cand
            suffix[pos][k] = best
    top = suffix[0][i]
    if top is None:
        return None, []
    out: list[Walk] = []
    steps: list[tuple[int, str]] = []

    def dfs(cur: int, pos: int, acc) -> None:
        if pos == L:
            out.append(Walk(i, tuple(steps)))
            return
        label = w.letters[pos]
        for l, x in G.out_arcs(cur, label):
            rest = suffix[pos + 1][l]
            if rest is None or acc + _magnitude(x) + rest != top:
                continue
            steps.append((l, label))
            dfs(l, pos + 1, acc + _magnitude(x))
            steps.pop()

    dfs(i, 0, 0)
    return top, out


def _zero_like(G: LwDigraph) -> Scalar:
    for x in G.arcs.values():
        return type(x).zero()
    return ZERO


# -- multigraphs with parallel arcs --------------------------------------


@dataclass(frozen=True)
class Arc:
    src: int
    dst: int
    label: str
    weight: SupertropScalar


@dataclass(frozen=True)
class Multigraph:
    """Labeled digraph that may carry parallel arcs with the same label."""

    n: int
    arcs: tuple[Arc, ...]


def expand_double(A: Matrix, B: Matrix | None = None) -> Multigraph:
    """Replace every ghost-weighted arc by two parallel real arcs.

    Arcs of ``A`` are labeled ``a`` and arcs of ``B`` (when given) ``b``.
    """
    arcs = []
    for label, M in (("a", A), ("b", B)):
        if M is None:
            continue
        if B is not None and M.n != A.n:
            raise DimensionError(f"dimension mismatch: {A.n} vs {M.n}")
        for i, j, x in M.entries():
            if isinstance(x, TropScalar):
                if x.value is not None:
                    arcs.append(Arc(i, j, label, real(x.value)))
            elif x.tag == REAL_TAG:
                arcs.append(Arc(i, j, label, x))
            elif x.tag == GHOST_TAG:
                arcs += [Arc(i, j, label, real(x.mag))] * 2
    return Multigraph(A.n, tuple(arcs))


def single_arcs(G: LwDigraph) -> Multigraph:
    """``G`` as a multigraph in which every arc, ghost or not, counts once."""
    arcs = []
    for (i, j, label), x in sorted(G.arcs.items()):
        mag = x.value if isinstance(x, TropScalar) else x.mag
        arcs.append(Arc(i, j, label, real(mag)))
    return Multigraph(G.n, tuple(arcs))


def multigraph_matrices(G: Multigraph) -> tuple[Matrix, Matrix]:
    """Collapse parallel arcs: each entry is the supertropical sum of its arcs."""
    acc = {label: [[ZERO] * G.n for _ in range(G.n)] for label in "ab"}
    for arc in G.arcs:
        w = arc.weight
        if w.is_ghost:
            w = real(w.mag) + real(w.mag)
        acc[arc.label][arc.src][arc.dst] = acc[arc.label][arc.src][arc.dst] + w
    return Matrix(acc["a"]), Matrix(acc["b"])


def _real_arcs(G: Multigraph) -> list[Arc]:
    out = []
    for arc in G.arcs:
        if arc.weight.is_zero:
            continue
        if arc.weight.is_ghost:
            out += [Arc(arc.src, arc.dst, arc.label, real(arc.weight.mag))] * 2
        else:
            out.append(arc)
    return out


def best_walks(G: Multigraph, w: Word) -> dict[tuple[int, int], tuple[object, int]]:
    """For every node pair, the highest walk weight labeled ``w`` and how many
    distinct walks (parallel arcs count separately) attain it.

    Pairs without any walk map to ``(None, 0)``.  Computed by dynamic
    programming over the word, so the word length is unrestricted.
    """
    arcs = _real_arcs(G)
    by_label: dict[str, list[Arc]] = {"a": [], "b": []}
    for arc in arcs:
        by_label[arc.label].append(arc)
    result = {}
    for i in range(G.n):
        state: list[tuple[object, int] | None] = [None] * G.n
        first = True
        for letter in w.letters:
            nxt: list[tuple[object, int] | None] = [None] * G.n
            for arc in by_label[letter]:
                if first:
                    if arc.src != i:
                        continue
                    cand = (arc.weight.mag, 1)
                else:
                    cur = state[arc.src]
                    if cur is None:
                        continue
                    cand = (cur[0] + arc.weight.mag, cur[1])
                old = nxt[arc.dst]
                if old is None or cand[0] > old[0]:
                    nxt[arc.dst] = cand
                elif cand[0] == old[0]:
                    nxt[arc.dst] = (old[0], old[1] + cand[1])
            state = nxt
            first = False
        for j in range(G.n):
            result[(i, j)] = state[j] if state[j] is not None else (None, 0)
    return result


def enumerate_multiwalks(G: Multigraph, w: Word, i: int, j: int, limit: int = DEFAULT_WALK_LIMIT) -> list[tuple[int, ...]]:
    """All walks ``i -> j`` labeled ``w`` as sequences of indices into the
    expanded (ghost-free) arc list ``_real_arcs(G)``."""
    arcs = _real_arcs(G)
    _check_limit(max(len(arcs), 1), len(w), limit)
    out: list[tuple[int, ...]] = []
    path: list[int] = []

    def dfs(cur: int, pos: int) -> None:
        if pos == len(w):
            if cur == j:
                out.append(tuple(path))
            return
        for idx, arc in enumerate(arcs):
            if arc.src == cur and arc.label == w.letters[pos]:
                path.append(idx)
                dfs(arc.dst, pos + 1)
                path.pop()

    dfs(i, 0)
    return out


def multiwalk_weight(G: Multigraph, walk: tuple[int, ...]):
    arcs = _real_arcs(G)
    return sum(arcs[k].weight.mag for k in walk)


@dataclass
class WalkCheckReport:
    entries: dict  # (i, j) -> (best_u, count_u, best_v, count_v)
    weight_violations: list[tuple[int, int]]
    uniqueness_violations: list[tuple[int, int]]

    @property
    def ok(self) -> bool:
        return not self.weight_violations and not self.uniqueness_violations


def corollary_walk_check(G: Multigraph, u: Word, v: Word) -> WalkCheckReport:
    """Compare highest walk weights labeled ``u`` and ``v`` for every node pair,
    and check that a unique best ``u``-walk forces a unique best ``v``-walk."""
    bu, bv = best_walks(G, u), best_walks(G, v)
    entries, weight_bad, unique_bad = {}, [], []
    for ij in sorted(bu):
        (wu, cu), (wv, cv) = bu[ij], bv[ij]
        entries[ij] = (wu, cu, wv, cv)
        if wu != wv:
            weight_bad.append(ij)
        elif cu == 1 and cv != 1:
            unique_bad.append(ij)
    return WalkCheckReport(entries, weight_bad, unique_bad)


# -- file format ----------------------------------------------------------


def digraph_to_obj(G: LwDigraph | Multigraph) -> dict:
    if isinstance(G, Multigraph):
        arcs = [(a.src, a.dst, a.label, a.weight) for a in G.arcs]
    else:
        arcs = [(i, j, lab, x) for (i, j, lab), x in sorted(G.arcs.items())]
    obj = {
        "n": G.n,
        "arcs": [
            {"from": i, "to": j, "label": lab, "weight": format_scalar(x)} for i, j, lab, x in arcs
        ],
    }
    if isinstance(G, Multigraph):
        obj["multigraph"] = True
    return obj


def format_digraph(G: LwDigraph | Multigraph) -> str:
    return json.dumps(digraph_to_obj(G), sort_keys=True, indent=1) + "\n"


def parse_digraph(text: str) -> LwDigraph | Multigraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DigraphParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(obj, dict) or "n" not in obj or "arcs" not in obj:
        raise DigraphParseError("digraph object needs fields 'n' and 'arcs'")
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DigraphParseError(f"bad node count {n!r}")
    multi = obj.get("multigraph", False) is True
    parsed = []
    for k, arc in enumerate(obj["arcs"]):
        try:
            i, j, lab, wt = arc["from"], arc["to"], arc["label"], arc["weight"]
        except (KeyError, TypeError):
            raise DigraphParseError(f"arc {k}: needs from, to, label, weight") from None
        if not all(isinstance(x, int) and 0 <= x < n for x in (i, j)):
            raise DigraphParseError(f"arc {k}: node out of range")
        if lab not in ("a", "b"):
            raise DigraphParseError(f"arc {k}: label must be 'a' or 'b'")
        try:
            x = parse_scalar(wt, "st")
        except (ValueError, AttributeError) as exc:
            raise DigraphParseError(f"arc {k}: {exc}") from None
        if x.is_zero:
            raise DigraphParseError(f"arc {k}: arcs cannot have weight -inf")
        parsed.append((i, j, lab, x))
    if multi:
        return Multigraph(n, tuple(Arc(*a) for a in parsed))
    arcs = {}
    for i, j, lab, x in parsed:
        if (i, j, lab) in arcs:
            raise DigraphParseError(f"parallel {lab}-arcs {i}->{j}; set multigraph: true")
        arcs[(i, j, lab)] = x
    return LwDigraph(n, arcs)
