"""Deciding identities of tropical matrix monoids and lifting them.

``<u, v>`` holds in the monoid of ``n x n`` tropical matrices exactly when,
for every entry ``(i, j)``, the configurations of the ``u``-walks and of the
``v``-walks from ``i`` to ``j`` on the complete lw-digraph span the same
convex hull.  A failure yields a separating direction, and reading that
direction as a pair of matrices gives a concrete counterexample.

Two certified tropical identities compose into a supertropical identity;
the randomized checks below exercise that claim and the lemmas behind it.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import lcm

import numpy as np

from .digraph import (
    LimitExceeded,
    Walk,
    config,
    digraph_of,
    enumerate_best_walks,
)
from .matrix import Matrix, mat_mul, matrix_from_obj, matrix_to_obj, nu_matrix, hat_matrix
from .polytope import (
    ConfigSet,
    NoSeparationError,
    Separation,
    separating_witness,
    vertices,
)
from .semiring import (
    GHOST_TAG,
    NEG_INF,
    REAL_TAG,
    ZERO,
    SupertropScalar,
    TropScalar,
    format_scalar,
    parse_scalar,
)
from .words import Identity, Word, compose_identity, content, evaluate

HOLDS = "HOLDS"
REFUTED = "REFUTED"
TRIVIAL_PAIR = "TRIVIAL_PAIR"

DEFAULT_MAX_SET = 200_000
# with pruning on, a DP set is reduced to its hull vertices once it has more
# points than this; small sets are cheaper to carry than to prune
DEFAULT_PRUNE_ABOVE = 1024


class CertificateError(ValueError):
    pass


def default_max_set() -> int:
    env = os.environ.get("STID_MAX_SET")
    return int(env) if env else DEFAULT_MAX_SET


# -- configuration sets -----------------------------------------------------


def config_sets(
    n: int,
    w: Word,
    prune: bool = False,
    max_set: int | None = None,
    prune_above: int = DEFAULT_PRUNE_ABOVE,
) -> dict[tuple[int, int], ConfigSet]:
    """Configurations of all ``w``-labeled walks on the complete lw-digraph.

    Dynamic programming over the letters of ``w``: for each start node the
    state maps the current node to the set of configurations reaching it.
    With ``prune``, a set holding more than ``prune_above`` points (at least
    two) is replaced by its hull vertices after the step.  This leaves the
    final hulls unchanged (appending a common arc preserves convex
    combinations) but discards quasi points; ``prune_above=2`` prunes at
    every step.
    """
    prune_above = max(prune_above, 2)
    if max_set is None:
        max_set = default_max_set()
    nn = n * n
    dim = 2 * nn
    out = {}
    for i in range(n):
        state: dict[int, set[tuple[int, ...]]] = {i: {(0,) * dim}}
        for step, letter in enumerate(w.letters, start=1):
            base = 0 if letter == "a" else nn
            nxt: dict[int, set[tuple[int, ...]]] = {}
            for k, configs in state.items():
                for l in range(n):
                    idx = base + k * n + l
                    target = nxt.setdefault(l, set())
                    for c in configs:
                        target.add(c[:idx] + (c[idx] + 1,) + c[idx + 1 :])
            if prune:
                for l, configs in nxt.items():
                    if len(configs) > prune_above:
                        nxt[l] = set(vertices(configs).vertices)
            for l, configs in nxt.items():
                if len(configs) > max_set:
                    raise LimitExceeded(
                        f"configuration set of size {len(configs)} at letter {step} "
                        f"(start {i}, node {l}) exceeds max_set={max_set}"
                    )
            state = nxt
        for j in range(n):
            out[(i, j)] = ConfigSet.of(state[j], dim)
    return out


# -- certificates -------------------------------------------------------------


@dataclass
class Witness:
    entry: tuple[int, int]
    A: Matrix
    B: Matrix
    u_value: TropScalar
    v_value: TropScalar
    reason: str  # "content" or "hull"
    side: str | None = None  # which word's hull owns the offending vertex
    vertex: tuple[int, ...] | None = None
    direction: tuple[Fraction, ...] | None = None
    margin: Fraction | None = None


@dataclass
class Certificate:
    verdict: str
    n: int
    identity: Identity
    prune: bool = True
    max_set: int = DEFAULT_MAX_SET
    prune_above: int = DEFAULT_PRUNE_ABOVE
    fingerprints: dict | None = None  # (i, j) -> sorted vertex tuple
    witness: Witness | None = None

    def validate(self) -> bool:
        """Recompute the claim the certificate makes."""
        if self.verdict == REFUTED:
            w = self.witness
            U = evaluate(self.identity.u, w.A, w.B, mat_mul)
            V = evaluate(self.identity.v, w.A, w.B, mat_mul)
            return U[w.entry] == w.u_value and V[w.entry] == w.v_value and w.u_value != w.v_value
        if self.verdict == HOLDS:
            su = config_sets(self.n, self.identity.u, self.prune, self.max_set, self.prune_above)
            sv = config_sets(self.n, self.identity.v, self.prune, self.max_set, self.prune_above)
            return all(
                vertices(su[ij]).vertices == vertices(sv[ij]).vertices == self.fingerprints[ij]
                for ij in su
            )
        return self.identity.trivial

    def to_obj(self) -> dict:
        obj = {
            "verdict": self.verdict,
            "n": self.n,
            "identity": {"u": str(self.identity.u), "v": str(self.identity.v)},
            "limits": {"prune": self.prune, "max_set": self.max_set, "prune_above": self.prune_above},
            "seed": None,
        }
        if self.fingerprints is not None:
            obj["vertices"] = {
                f"{i},{j}": [list(p) for p in pts] for (i, j), pts in sorted(self.fingerprints.items())
            }
        if self.witness is not None:
            w = self.witness
            obj["witness"] = {
                "reason": w.reason,
                "entry": list(w.entry),
                "A": matrix_to_obj(w.A),
                "B": matrix_to_obj(w.B),
                "u_value": format_scalar(w.u_value),
                "v_value": format_scalar(w.v_value),
                "side": w.side,
                "vertex": None if w.vertex is None else list(w.vertex),
                "direction": None if w.direction is None else [str(x) for x in w.direction],
                "margin": None if w.margin is None else str(w.margin),
            }
        return obj

    def to_text(self) -> str:
        return json.dumps(self.to_obj(), sort_keys=True, indent=1) + "\n"

    def digest(self) -> str:
        return hashlib.sha256(self.to_text().encode()).hexdigest()


def certificate_from_text(text: str) -> Certificate:
    try:
        obj = json.loads(text)
        identity = Identity(Word(obj["identity"]["u"]), Word(obj["identity"]["v"]))
        cert = Certificate(
            obj["verdict"],
            obj["n"],
            identity,
            prune=obj["limits"]["prune"],
            max_set=obj["limits"]["max_set"],
            prune_above=obj["limits"].get("prune_above", DEFAULT_PRUNE_ABOVE),
        )
        if "vertices" in obj:
            cert.fingerprints = {
                tuple(int(c) for c in key.split(",")): tuple(tuple(p) for p in pts)
                for key, pts in obj["vertices"].items()
            }
        if "witness" in obj:
            w = obj["witness"]
            cert.witness = Witness(
                entry=tuple(w["entry"]),
                A=matrix_from_obj(w["A"], "trop"),
                B=matrix_from_obj(w["B"], "trop"),
                u_value=parse_scalar(w["u_value"], "trop"),
                v_value=parse_scalar(w["v_value"], "trop"),
                reason=w["reason"],
                side=w["side"],
                vertex=None if w["vertex"] is None else tuple(w["vertex"]),
                direction=None if w["direction"] is None else tuple(Fraction(x) for x in w["direction"]),
                margin=None if w["margin"] is None else Fraction(w["margin"]),
            )
    except (KeyError, TypeError, ValueError) as exc:
        raise CertificateError(f"malformed certificate: {exc}") from None
    if cert.verdict not in (HOLDS, REFUTED, TRIVIAL_PAIR):
        raise CertificateError(f"unknown verdict {cert.verdict!r}")
    return cert


# -- the decision procedure ---------------------------------------------------


def _scalar_matrix(n: int, diag) -> Matrix:
    return Matrix([[TropScalar(diag) if i == j else NEG_INF for j in range(n)] for i in range(n)])


def _witness_from_direction(n: int, x: tuple[Fraction, ...]) -> tuple[Matrix, Matrix]:
    nn = n * n
    A = Matrix([[TropScalar(x[k * n + l]) for l in range(n)] for k in range(n)])
    B = Matrix([[TropScalar(x[nn + k * n + l]) for l in range(n)] for k in range(n)])
    return A, B


def verify_trop(
    n: int,
    identity: Identity,
    prune: bool = True,
    max_set: int | None = None,
    prune_above: int = DEFAULT_PRUNE_ABOVE,
) -> Certificate:
    """Decide whether ``identity`` holds in the monoid of tropical n x n matrices."""
    if max_set is None:
        max_set = default_max_set()
    limits = (prune, max_set, prune_above)
    if identity.trivial:
        return Certificate(TRIVIAL_PAIR, n, identity, *limits)
    u, v = identity.u, identity.v

    cu, cv = content(u), content(v)
    if cu != cv:
        A, B = (_scalar_matrix(n, 1), _scalar_matrix(n, 0))
        if cu[0] == cv[0]:
            A, B = B, A
        U, V = evaluate(u, A, B, mat_mul), evaluate(v, A, B, mat_mul)
        wit = Witness((0, 0), A, B, U[0, 0], V[0, 0], "content")
        cert = Certificate(REFUTED, n, identity, *limits, witness=wit)
        assert cert.validate()
        return cert

    su = config_sets(n, u, *limits)
    sv = config_sets(n, v, *limits)
    prints = {}
    for ij in sorted(su):
        vu = vertices(su[ij]).vertices
        vv = vertices(sv[ij]).vertices
        if vu == vv:
            prints[ij] = vu
            continue
        # smallest offending vertex that is separable from the other hull
        candidates = sorted(
            [(p, "u") for p in set(vu) - set(vv)] + [(p, "v") for p in set(vv) - set(vu)]
        )
        for p, side in candidates:
            other = vv if side == "u" else vu
            try:
                sep: Separation = separating_witness(p, other)
            except NoSeparationError:
                continue
            A, B = _witness_from_direction(n, sep.direction)
            U, V = evaluate(u, A, B, mat_mul), evaluate(v, A, B, mat_mul)
            wit = Witness(ij, A, B, U[ij], V[ij], "hull", side, p, sep.direction, sep.margin)
            cert = Certificate(REFUTED, n, identity, *limits, witness=wit)
            if not cert.validate():
                raise AssertionError(f"witness for {identity} at {ij} failed re-validation")
            return cert
        raise AssertionError("distinct vertex sets without a separable vertex")
    return Certificate(HOLDS, n, identity, *limits, fingerprints=prints)


# -- composition --------------------------------------------------------------


@dataclass
class LiftedIdentity:
    identity: Identity
    n: int
    outer: Identity
    inner: Identity
    digests: tuple[str, str]  # sha256 of the outer and inner certificates

    def provenance(self) -> list[str]:
        return [
            f"supertropical identity for {self.n}x{self.n} matrices",
            "composition theorem: tropical identities <u,v> and <u',v'> of the same size "
            "give the supertropical identity <u[u'/v'], v[u'/v']>",
            f"outer: {self.outer}",
            f"inner: {self.inner}",
            f"outer certificate sha256: {self.digests[0]}",
            f"inner certificate sha256: {self.digests[1]}",
        ]


def lift_to_supertropical(
    outer: Identity, inner: Identity, cert_outer: Certificate, cert_inner: Certificate
) -> LiftedIdentity:
    """Compose two certified tropical identities into a supertropical one.

    If ``<u, v>`` and ``<u', v'>`` hold for tropical n x n matrices, then
    ``<u[u'/v'], v[u'/v']>`` holds for supertropical n x n matrices: the inner
    pair evaluates to nu-equivalent matrices, and the outer identity is
    exact on nu-equivalent arguments.
    """
    for name, ident, cert in (("outer", outer, cert_outer), ("inner", inner, cert_inner)):
        if cert.verdict != HOLDS:
            raise CertificateError(f"{name} certificate is {cert.verdict}, not {HOLDS}")
        if cert.identity != ident:
            raise CertificateError(f"{name} certificate is for {cert.identity}, not {ident}")
    if cert_outer.n != cert_inner.n:
        raise CertificateError(f"certificates for different sizes: {cert_outer.n} vs {cert_inner.n}")
    composed = compose_identity(outer, inner)
    return LiftedIdentity(composed, cert_outer.n, outer, inner, (cert_outer.digest(), cert_inner.digest()))


# -- randomized exact checks --------------------------------------------------


def random_magnitude(rng: random.Random) -> int | Fraction:
    k = rng.randint(-20, 20)
    m = rng.choice((1, 2, 3))
    q = Fraction(k, m)
    return q.numerator if q.denominator == 1 else q


def random_scalar(rng: random.Random, kind: str = "st"):
    r = rng.random()
    if r < 0.2:
        return ZERO if kind == "st" else NEG_INF
    mag = random_magnitude(rng)
    if kind == "trop":
        return TropScalar(mag)
    return SupertropScalar(GHOST_TAG if r < 0.4 else REAL_TAG, mag)


def random_matrix(rng: random.Random, n: int, kind: str = "st") -> Matrix:
    return Matrix([[random_scalar(rng, kind) for _ in range(n)] for _ in range(n)])


def retag(rng: random.Random, A: Matrix) -> Matrix:
    """Independently choose real or ghost for every non-zero entry."""
    return A.map(
        lambda x: x if x.is_zero else SupertropScalar(rng.choice((REAL_TAG, GHOST_TAG)), x.mag)
    )


_NEG = -(2**62)  # code of the zero element in packed evaluation
_BATCH = 1000


class _Packed:
    """Exact integer encoding of a batch of matrix pairs for vectorized evaluation.

    Magnitudes are scaled by the common denominator ``scale``.  A supertropical
    entry becomes ``2 * m + ghost``, a tropical one ``m``, and zero becomes
    ``_NEG``.  Scaling by a positive constant commutes with max and with sums,
    and integer codes order exactly like the semiring, so equality and ghost
    tags of the evaluations are unchanged.  Arrays have shape ``(T, n, n)``.
    """

    def __init__(self, pairs: list[tuple[Matrix, Matrix]]):
        A0 = pairs[0][0]
        self.st = A0.scalar_type is SupertropScalar
        self.n = A0.n
        dens = [1]
        top = 1
        for pair in pairs:
            for M in pair:
                for _, _, x in M.entries():
                    mag = x.value if isinstance(x, TropScalar) else x.mag
                    if mag is not None:
                        q = Fraction(mag)
                        dens.append(q.denominator)
                        top = max(top, abs(q))
        self.scale = lcm(*dens)
        self.bound = 2 * top * self.scale + 1  # largest code size of one entry
        self.mats = [
            np.array([[self._row(r) for r in pair[k].rows] for pair in pairs], dtype=np.int64)
            for k in (0, 1)
        ]

    def _row(self, r):
        out = []
        for x in r:
            if self.st:
                out.append(_NEG if x.is_zero else 2 * int(x.mag * self.scale) + (x.tag == GHOST_TAG))
            else:
                out.append(_NEG if x.value is None else int(x.value * self.scale))
        return out

    def fits(self, length: int) -> bool:
        """Whether codes of words up to ``length`` letters stay far from ``_NEG``."""
        return self.bound * (length + 1) < 2**60

    def mul(self, X, Y):
        n = self.n
        out = np.empty_like(X)
        for i in range(n):
            for j in range(n):
                acc = None
                for k in range(n):
                    x, y = X[:, i, k], Y[:, k, j]
                    dead = (x == _NEG) | (y == _NEG)
                    if self.st:
                        p = (((x >> 1) + (y >> 1)) << 1) | ((x | y) & 1)
                    else:
                        p = x + y
                    p[dead] = _NEG
                    if acc is None:
                        acc = p
                    elif self.st:
                        tie = ((acc >> 1) == (p >> 1)) & (acc != _NEG)
                        acc = np.where(tie, acc | 1, np.maximum(acc, p))
                    else:
                        acc = np.maximum(acc, p)
                out[:, i, j] = acc
        return out

    def evaluate(self, w: Word):
        S, T = self.mats
        acc = S if w.letters[0] == "a" else T
        for c in w.letters[1:]:
            acc = self.mul(acc, S if c == "a" else T)
        return acc


@dataclass
class Counterexample:
    A: Matrix
    B: Matrix
    entry: tuple[int, int]
    u_value: object
    v_value: object
    trial: int


@dataclass
class FuzzResult:
    passed: bool
    trials: int
    seed: int
    counterexample: Counterexample | None = None
    warnings: list[str] = field(default_factory=list)


def _first_mismatch(identity: Identity, A: Matrix, B: Matrix, relation) -> tuple | None:
    U = evaluate(identity.u, A, B, mat_mul)
    V = evaluate(identity.v, A, B, mat_mul)
    for i, j, x in U.entries():
        if not relation(x, V[i, j]):
            return (i, j), x, V[i, j]
    return None


def _run_trials(identity, trials, seed, sample, packed_equal, relation) -> FuzzResult:
    """Draw ``trials`` samples in order; evaluate them in vectorized batches
    and confirm the first packed mismatch with direct evaluation."""
    rng = random.Random(seed)
    warnings = [] if trials > 0 else ["zero trials requested: vacuous PASS"]
    done = 0
    while done < trials:
        pairs = [sample(rng) for _ in range(min(_BATCH, trials - done))]
        packed = _Packed(pairs)
        if packed.fits(identity.length):
            same = packed_equal(packed.evaluate(identity.u), packed.evaluate(identity.v))
            suspects = np.flatnonzero(~same)
        else:
            suspects = range(len(pairs))
        for k in suspects:
            A, B = pairs[k]
            hit = _first_mismatch(identity, A, B, relation)
            if hit is None:
                if packed.fits(identity.length):
                    raise AssertionError("packed and direct evaluation disagree")
                continue
            entry, uv, vv = hit
            t = done + int(k)
            return FuzzResult(False, t + 1, seed, Counterexample(A, B, entry, uv, vv, t), warnings)
        done += len(pairs)
    return FuzzResult(True, trials, seed, None, warnings)


def _equal_codes(U, V):
    return (U == V).all(axis=(1, 2))


def _nu_equal_codes(U, V):
    return ((U >> 1) == (V >> 1)).all(axis=(1, 2))


def fuzz_check(n: int, identity: Identity, kind: str = "trop", trials: int = 1000, seed: int = 0) -> FuzzResult:
    """Evaluate both sides on random matrix pairs; stop at the first mismatch."""
    if kind not in ("trop", "st"):
        raise ValueError(f"unknown kind {kind!r}")

    def sample(rng):
        return random_matrix(rng, n, kind), random_matrix(rng, n, kind)

    return _run_trials(identity, trials, seed, sample, _equal_codes, lambda x, y: x == y)


def _require_holds(identity: Identity, certificate: Certificate | None) -> None:
    if certificate is None:
        return
    if certificate.verdict != HOLDS or certificate.identity != identity:
        raise CertificateError(f"needs a {HOLDS} tropical certificate for {identity}")


def check_lemma_nu_equiv(
    n: int, identity: Identity, trials: int, seed: int, certificate: Certificate | None = None
) -> FuzzResult:
    """Both sides must be nu-equivalent on every supertropical pair."""
    _require_holds(identity, certificate)

    def sample(rng):
        return random_matrix(rng, n, "st"), random_matrix(rng, n, "st")

    return _run_trials(
        identity,
        trials,
        seed,
        sample,
        _nu_equal_codes,
        lambda x, y: (x.is_zero and y.is_zero) or (x.mag == y.mag and not x.is_zero and not y.is_zero),
    )


def check_lemma_nu_pair(
    n: int,
    identity: Identity,
    trials: int,
    seed: int,
    certificate: Certificate | None = None,
    mode: str = "retag",
) -> FuzzResult:
    """Both sides must agree exactly on nu-equivalent pairs ``A, B``.

    ``mode`` picks ``B``: ``retag`` re-draws every tag of ``A``, ``nu`` uses
    ``nu(A)``, ``hat`` uses the ghost-free lift of ``A``, ``same`` uses ``A``.
    """
    _require_holds(identity, certificate)
    if mode not in ("retag", "nu", "hat", "same"):
        raise ValueError(f"unknown mode {mode!r}")

    def sample(rng):
        A = random_matrix(rng, n, "st")
        if mode == "retag":
            return A, retag(rng, A)
        if mode == "nu":
            return A, nu_matrix(A)
        if mode == "hat":
            return A, hat_matrix(A)
        return A, A

    return _run_trials(identity, trials, seed, sample, _equal_codes, lambda x, y: x == y)


# -- walk correspondence diagnostics -------------------------------------------


@dataclass
class CorrespondenceReport:
    entry: tuple[int, int]
    best_weight: object  # nu-magnitude of the best u-walks, None without walks
    u_walks: list[Walk]  # best u-walks
    v_walks: list[Walk]  # v-walks of that weight
    vertex_flags: list[bool]  # per best u-walk: config is a hull vertex
    failures: list[str]
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def walk_correspondence(
    A: Matrix,
    B: Matrix,
    identity: Identity,
    i: int,
    j: int,
    hull_vertices: dict | None = None,
) -> CorrespondenceReport:
    """Check the walk-level consequences of a tropical identity at entry ``(i, j)``.

    For the best (highest nu-weight) ``u``-walks:
      (i) a walk whose configuration is a hull vertex has a ``v``-walk with the
          same configuration and weight;
      (ii) a walk whose configuration is not a vertex is matched by best
          ``v``-walks with at least two distinct configurations other than its own;
      (iii) two inequivalent best ``u``-walks force two inequivalent best ``v``-walks.
    All best walks on both sides are enumerated exactly.  ``hull_vertices``
    may supply ``{(i, j): vertex tuple}`` of the ``u`` hulls (computed
    without pruning otherwise).
    """
    n = A.n
    G = digraph_of(A, B)
    u, v = identity.u, identity.v
    best, best_u = enumerate_best_walks(G, u, i, j)
    v_best, best_v = enumerate_best_walks(G, v, i, j)
    notes = ["(iii) read as: at least two mutually inequivalent best v-walks"]
    failures: list[str] = []
    if best is None:
        if v_best is not None:
            failures.append(f"no u-walk {i}->{j} but v-walks of weight {v_best}")
        return CorrespondenceReport((i, j), None, [], best_v, [], failures, notes + ["no u-walk"])
    if v_best != best:
        failures.append(f"best v-walk weight {v_best} differs from {best}")
        best_v = []
    if hull_vertices is not None:
        verts = set(hull_vertices[(i, j)])
    else:
        verts = set(vertices(config_sets(n, u)[(i, j)]).vertices)
    v_configs = {config(g, n) for g in best_v}
    flags = []
    for g in best_u:
        p = config(g, n)
        is_vertex = p in verts
        flags.append(is_vertex)
        if is_vertex:
            if p not in v_configs:
                failures.append(f"(i) vertex walk {g} has no v-walk with the same configuration")
        else:
            others = v_configs - {p}
            if len(others) < 2:
                failures.append(
                    f"(ii) non-vertex walk {g}: only {len(others)} other best v-configurations"
                )
    if len({config(g, n) for g in best_u}) >= 2 and len(v_configs) < 2:
        failures.append("(iii) inequivalent best u-walks but a single best v-configuration")
    return CorrespondenceReport((i, j), best, best_u, best_v, flags, failures, notes)


# -- bounded identity search ----------------------------------------------------


def content_equal_pairs(length: int):
    """Unordered pairs ``u < v`` of distinct words of one length and equal content."""
    words = ["".join(p) for p in product("ab", repeat=length)]
    by_content: dict[int, list[str]] = {}
    for w in words:
        by_content.setdefault(w.count("a"), []).append(w)
    for _, group in sorted(by_content.items()):
        for x in range(len(group)):
            for y in range(x + 1, len(group)):
                yield Identity(Word(group[x]), Word(group[y]))


@dataclass
class SearchResult:
    found: list[tuple[Identity, Certificate]]
    log: list[str]
    truncated: bool
    examined: int


def search_identities(
    n: int, max_len: int, budget: int = 10_000, trials: int = 200, seed: int = 0
) -> SearchResult:
    """Enumerate content-equal pairs up to ``max_len``, filter by fuzzing and
    certify the survivors.  ``budget`` caps the number of pairs examined."""
    found, log = [], []
    examined = 0
    for length in range(2, max_len + 1):
        pairs_here = survivors = 0
        for ident in content_equal_pairs(length):
            if examined >= budget:
                log.append(f"TRUNCATED: budget of {budget} pairs exhausted at length {length}")
                return SearchResult(found, log, True, examined)
            examined += 1
            pairs_here += 1
            if not fuzz_check(n, ident, "trop", trials, seed).passed:
                continue
            survivors += 1
            cert = verify_trop(n, ident)
            log.append(f"length {length}: {ident} survived fuzzing -> {cert.verdict}")
            if cert.verdict == HOLDS:
                found.append((ident, cert))
        log.append(f"length {length}: {pairs_here} pairs, {survivors} survived fuzzing")
    log.append(f"done: {examined} pairs examined, {len(found)} certified")
    return SearchResult(found, log, False, examined)
