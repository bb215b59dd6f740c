import random
from fractions import Fraction
from itertools import product

import pytest

from stid.digraph import config, digraph_of, enumerate_walks
from stid.matrix import Matrix, mat_mul
from stid.polytope import ConfigSet, vertices
from stid.semiring import GHOST_TAG, SupertropScalar
from stid.verifier import (
    HOLDS,
    REFUTED,
    TRIVIAL_PAIR,
    Certificate,
    CertificateError,
    _NEG,
    _Packed,
    certificate_from_text,
    check_lemma_nu_equiv,
    check_lemma_nu_pair,
    config_sets,
    content_equal_pairs,
    fuzz_check,
    lift_to_supertropical,
    random_matrix,
    search_identities,
    verify_trop,
    walk_correspondence,
)
from stid.words import Identity, TrivialPairError, Word, evaluate

COMM = Identity(Word("ab"), Word("ba"))


def ident(u, v):
    return Identity(Word(u), Word(v))


def unit(k, dim):
    return tuple(1 if i == k else 0 for i in range(dim))


def test_config_sets_examples():
    assert config_sets(1, Word("ab")) == {(0, 0): ConfigSet(2, ((1, 1),))}
    sets = config_sets(2, Word("a"))
    for i, j in product(range(2), repeat=2):
        assert sets[(i, j)].points == (unit(2 * i + j, 8),)
    pts = config_sets(2, Word("ab"))[(1, 1)].points
    # a-arc 1->1 then b-arc 1->1, or a-arc 1->0 then b-arc 0->1
    assert set(pts) == {(0, 0, 0, 1, 0, 0, 0, 1), (0, 0, 1, 0, 0, 1, 0, 0)}


def test_config_sets_match_walk_enumeration():
    rng = random.Random(0)
    for n in (1, 2, 3):
        G = digraph_of(Matrix.identity(n).map(lambda x: SupertropScalar(1, 0)), Matrix.identity(n).map(lambda x: SupertropScalar(1, 0)))
        for _ in range(4):
            w = Word("".join(rng.choice("ab") for _ in range(rng.randint(1, 5))))
            sets = config_sets(n, w)
            for i, j in product(range(n), repeat=2):
                assert set(sets[(i, j)].points) == {config(g, n) for g in enumerate_walks(G, w, i, j)}


def test_pruning_keeps_vertex_sets():
    rng = random.Random(1)
    for _ in range(15):
        w = Word("".join(rng.choice("ab") for _ in range(rng.randint(1, 9))))
        full = config_sets(2, w)
        pruned = config_sets(2, w, prune=True, prune_above=2)
        for ij in full:
            assert vertices(full[ij]).vertices == vertices(pruned[ij]).vertices
            assert set(pruned[ij].points) <= set(full[ij].points)


def test_max_set_limit():
    from stid.digraph import LimitExceeded

    with pytest.raises(LimitExceeded, match="letter"):
        config_sets(3, Word("abababab"), max_set=10)


def test_verify_examples():
    assert verify_trop(1, COMM).verdict == HOLDS
    cert = verify_trop(2, COMM)
    assert cert.verdict == REFUTED and cert.validate()
    w = cert.witness
    assert w.reason == "hull" and w.u_value != w.v_value
    # the witness matrices are the separating direction read verbatim
    flat = [w.A[k, l].value for k in range(2) for l in range(2)] + [w.B[k, l].value for k in range(2) for l in range(2)]
    assert tuple(flat) == w.direction
    assert verify_trop(2, ident("ab", "ab")).verdict == TRIVIAL_PAIR


def test_content_fast_path():
    for u, v in (("aab", "ab"), ("ab", "abb"), ("a", "b")):
        cert = verify_trop(3, ident(u, v))
        assert cert.verdict == REFUTED and cert.witness.reason == "content" and cert.validate()


def test_candidate_with_abba_blocks_is_refuted_consistently():
    candidate = ident("abba" "ab" "abba", "abba" "ba" "abba")
    cert = verify_trop(2, candidate)
    assert cert.verdict == REFUTED and cert.validate()
    assert not fuzz_check(2, candidate, "trop", 2000, 0).passed


def test_certificate_round_trip():
    for n, identity in ((2, COMM), (1, COMM), (2, ident("aab", "ab")), (2, ident("ab", "ab"))):
        cert = verify_trop(n, identity)
        text = cert.to_text()
        back = certificate_from_text(text)
        assert back.to_text() == text
        assert back.validate()
        assert back.digest() == cert.digest()
    with pytest.raises(CertificateError):
        certificate_from_text('{"verdict": "MAYBE"}')


def test_lift_examples():
    c1 = verify_trop(1, COMM)
    lifted = lift_to_supertropical(COMM, COMM, c1, c1)
    assert lifted.identity == ident("abba", "baab") and lifted.n == 1
    assert any("composition theorem" in line for line in lifted.provenance())
    with pytest.raises(CertificateError):
        lift_to_supertropical(COMM, COMM, verify_trop(2, COMM), verify_trop(2, COMM))
    with pytest.raises(CertificateError):
        lift_to_supertropical(ident("aab", "aba"), COMM, c1, c1)
    one = ident("a", "a")
    with pytest.raises(TrivialPairError):
        lift_to_supertropical(COMM, one, c1, Certificate(HOLDS, 1, one, fingerprints={}))


def test_fuzz_examples():
    assert fuzz_check(1, COMM, "trop", 300, 5).passed
    assert fuzz_check(1, COMM, "st", 300, 5).passed
    bad = fuzz_check(2, COMM, "trop", 100, 0)
    assert not bad.passed and bad.trials <= 5
    ce = bad.counterexample
    U, V = evaluate(COMM.u, ce.A, ce.B, mat_mul), evaluate(COMM.v, ce.A, ce.B, mat_mul)
    assert U[ce.entry] == ce.u_value != ce.v_value == V[ce.entry]
    vac = fuzz_check(2, COMM, "st", 0, 0)
    assert vac.passed and vac.warnings
    assert fuzz_check(2, COMM, "st", 50, 9) == fuzz_check(2, COMM, "st", 50, 9)


def test_lemma_checks_n1():
    c1 = verify_trop(1, COMM)
    assert check_lemma_nu_equiv(1, COMM, 500, 0, c1).passed
    for mode in ("retag", "nu", "hat", "same"):
        assert check_lemma_nu_pair(1, COMM, 300, 0, c1, mode=mode).passed
    with pytest.raises(CertificateError):
        check_lemma_nu_equiv(2, COMM, 10, 0, verify_trop(2, COMM))


def test_lemma_checks_detect_failures():
    # at n = 2 commutativity is false, so the lemma premises fail and so do the checks
    assert not check_lemma_nu_equiv(2, COMM, 200, 0).passed
    assert not check_lemma_nu_pair(2, COMM, 200, 0, mode="retag").passed
    # with B = A both sides are the same product, so nothing can fail
    assert check_lemma_nu_pair(2, COMM, 200, 0, mode="same").passed


def test_packed_evaluation_matches_generic():
    rng = random.Random(21)
    for _ in range(60):
        n = rng.choice((1, 2, 3))
        kind = rng.choice(("st", "trop"))
        pairs = [(random_matrix(rng, n, kind), random_matrix(rng, n, kind)) for _ in range(8)]
        w = Word("".join(rng.choice("ab") for _ in range(rng.randint(1, 6))))
        packed = _Packed(pairs)
        got = packed.evaluate(w)
        for t, (A, B) in enumerate(pairs):
            M = evaluate(w, A, B, mat_mul)
            for i, j, x in M.entries():
                code = int(got[t, i, j])
                if kind == "st":
                    if x.is_zero:
                        assert code == _NEG
                    else:
                        assert Fraction(code >> 1, packed.scale) == x.mag
                        assert (code & 1) == (x.tag == GHOST_TAG)
                elif x.value is None:
                    assert code == _NEG
                else:
                    assert Fraction(code, packed.scale) == x.value


def test_fuzz_is_batch_independent(monkeypatch):
    import stid.verifier as V

    first = fuzz_check(2, COMM, "st", 300, 4)
    monkeypatch.setattr(V, "_BATCH", 7)
    second = fuzz_check(2, COMM, "st", 300, 4)
    assert not first.passed
    assert first.trials == second.trials
    assert first.counterexample.trial == second.counterexample.trial


def test_substitution_coherence():
    rng = random.Random(6)
    outer, inner = COMM, COMM
    composed = ident("abba", "baab")
    for _ in range(100):
        A, B = random_matrix(rng, 1), random_matrix(rng, 1)
        U1 = evaluate(inner.u, A, B, mat_mul)
        V1 = evaluate(inner.v, A, B, mat_mul)
        assert evaluate(composed.u, A, B, mat_mul) == evaluate(outer.u, U1, V1, mat_mul)
        assert evaluate(composed.v, A, B, mat_mul) == evaluate(outer.v, U1, V1, mat_mul)


def test_walk_correspondence_trivial_cases():
    rng = random.Random(3)
    same = ident("abab", "abab")
    for _ in range(10):
        A, B = random_matrix(rng, 2), random_matrix(rng, 2)
        for i, j in product(range(2), repeat=2):
            assert walk_correspondence(A, B, same, i, j).ok
    for _ in range(20):
        A, B = random_matrix(rng, 1), random_matrix(rng, 1)
        rep = walk_correspondence(A, B, ident("aab", "aba"), 0, 0)
        assert rep.ok and all(rep.vertex_flags)


def test_walk_correspondence_flags_a_false_identity():
    rng = random.Random(4)
    failures = 0
    for _ in range(20):
        A, B = random_matrix(rng, 2, "trop"), random_matrix(rng, 2, "trop")
        failures += sum(not walk_correspondence(A, B, COMM, i, j).ok for i, j in product(range(2), repeat=2))
    assert failures > 0


def test_content_equal_pairs_count():
    assert sum(1 for length in range(1, 6) for _ in content_equal_pairs(length)) == 144


def test_search_examples():
    res = search_identities(1, 2)
    assert COMM in [i for i, _ in res.found] and not res.truncated
    res = search_identities(2, 6, budget=5)
    assert res.truncated and res.log[-1].startswith("TRUNCATED")
    assert res.examined == 5
