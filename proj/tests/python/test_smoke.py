from math import comb, factorial

import pytest

import binomeq


def test_binomials_are_exact():
    assert binomeq.binom(100, 50) == comb(100, 50)
    assert binomeq.binom(-5, 3) == -35
    big = 10**40 + 7
    assert binomeq.binom(big, 2) == big * (big - 1) // 2
    assert binomeq.binom_inverse(3003, 5) == 15
    assert binomeq.binom_inverse(3003, 3) is None


def test_verify_solution():
    assert binomeq.verify_solution(2, 4, 0, 21, 10)
    assert not binomeq.verify_solution(2, 4, 1, 21, 10)
    assert binomeq.verify_solution(3, 2, 1, 425779, 160403633)


def test_corpus():
    rep = binomeq.verify_corpus()
    assert rep["records"] == 189
    assert rep["failures"] == 0
    assert rep["failed"] == []


def test_corrupted_corpus_fails(tmp_path):
    path = tmp_path / "corpus.txt"
    path.write_text("2 4 0 21 10 equal-binomials\n2 4 0 22 10 equal-binomials\n")
    rep = binomeq.verify_corpus(str(path))
    assert rep["records"] == 2
    assert rep["failures"] == 1


def test_sieve():
    assert not binomeq.congruence_solvable(2, 4, 4, 7)
    assert binomeq.congruence_solvable(2, 4, 3, 7)
    cells = {(k, l, p): r for k, l, p, r in binomeq.scan_unsolvable(4, 4, 17, workers=2)}
    assert cells[(2, 4, 7)] == [4]
    assert cells[(2, 4, 17)] == [7]


def test_equal_index_against_brute_force():
    box = range(-60, 61)
    expected = sorted((n, m) for n in box for m in box if comb_gen(n, 3) - comb_gen(m, 3) == 10)
    assert binomeq.solve_equal_index(3, 10) == expected
    assert binomeq.solve_equal_index(3, 10, all_integers=False) == [(6, 5)]
    with pytest.raises(binomeq.DomainError):
        binomeq.solve_equal_index(3, 0)


def test_collisions():
    found = binomeq.collision_search(3, 40, 3)
    assert found == {2180: [(25, 10), (33, 28), (36, 32)]}


def test_curves():
    models = binomeq.curve_models()
    assert len(models) == 8
    assert all(row[4] for row in models)
    assert (10, 16) in binomeq.bounded_search(2, 3, 0, m_bound=1000)


def test_polynomial_solutions():
    assert len(binomeq.solve_k22(3)["solutions"]) == 3
    r = binomeq.solve_k22(9)
    assert r["solutions"] == []
    assert r["certificate"] == 14


def test_criterion():
    r = binomeq.run_criterion(6)
    assert r["passed"], r["details"]


def comb_gen(n, k):
    num = 1
    for i in range(k):
        num *= n - i
    return num // factorial(k)
