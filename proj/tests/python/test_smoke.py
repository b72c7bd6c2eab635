"""Smoke tests for the python bindings: the main operations round-trip."""

import pytest

import linkcert


def test_sequences_match_the_tables():
    assert [linkcert.seq.alpha(n) for n in range(1, 6)] == [6, 10, 26, 52, 110]
    assert linkcert.seq.alpha_prime(5) == 21
    assert linkcert.seq.beta(1) == 10
    assert linkcert.seq.gamma(3) == 30
    assert linkcert.seq.vertex_budget(3)[0] == 27
    assert linkcert.seq.vertex_budget(4)[0] == 261
    # alpha' grows without bound; exact integers must survive the bridge
    assert linkcert.seq.alpha_prime(61) == (4**31 - 1) // 3


def test_random_embedding_is_valid_and_deterministic():
    emb = linkcert.random_embedding(8, seed=5)
    assert emb["n"] == 8
    ok, detail = linkcert.validate_embedding(emb)
    assert ok, detail
    assert linkcert.random_embedding(8, seed=5) == emb


def test_linking_number_and_gauss_agree():
    emb = linkcert.random_embedding(8, seed=11)
    a, b = [0, 1, 2, 3], [4, 5, 6, 7]
    lk = linkcert.linking_number(emb, a, b)
    assert isinstance(lk, int)
    assert abs(linkcert.gauss_estimate(emb, a, b) - lk) < 1e-6
    assert linkcert.linking_number(emb, list(reversed(a)), b) == -lk


def test_generic_direction_returns_shears():
    emb = linkcert.random_embedding(6, seed=2)
    a, b = linkcert.generic_direction(emb)
    int(a.split("/")[0])  # decimal or rational string


def test_construct_and_verify_certificate():
    emb = linkcert.random_embedding(6, seed=1)
    cert = linkcert.construct(emb, "k6-nonsplit-odd", seed=1)
    assert cert["theorem"] == "k6-nonsplit-odd"
    assert cert["linkingMatrix"][0][1] % 2 == 1
    ok, detail = linkcert.verify_certificate(emb, cert)
    assert ok, detail

    cert["linkingMatrix"][0][1] += 2
    ok, detail = linkcert.verify_certificate(emb, cert)
    assert not ok
    assert "match" in detail


def test_required_vertices_and_errors():
    assert linkcert.required_vertices("mod3") == 35
    with pytest.raises(linkcert.PreconditionError):
        linkcert.construct(linkcert.random_embedding(5, seed=1), "k6-nonsplit")
    with pytest.raises(linkcert.SearchExhausted):
        linkcert.construct(
            linkcert.random_embedding(10, seed=1), "mod4-k10", max_tuples=1
        )
