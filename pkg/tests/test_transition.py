from itertools import permutations
from math import factorial

import pytest

from hookzeta.partition import hook, is_hook, partitions_of
from hookzeta.symexpr import SymExpr, p, s, to_h_basis
from hookzeta.transition import (
    CACHE_ENV,
    CharacterTable,
    cached_char_table,
    char_table,
    character,
    mn_multiply,
    power_to_schur,
)


def test_mn_multiply_examples():
    assert mn_multiply(3, s()) == s(3) - s(2, 1) + s(1, 1, 1)
    assert mn_multiply(2, s(1)) == s(3) - s(1, 1, 1)
    assert mn_multiply(1, s()) == s(1)


def test_mn_multiply_errors():
    with pytest.raises(ValueError):
        mn_multiply(0, s())
    with pytest.raises(ValueError):
        mn_multiply(1, p(1))


def test_power_to_schur_examples():
    assert power_to_schur((2, 1)) == s(3) - s(1, 1, 1)
    assert power_to_schur((1, 1)) == s(2) + s(1, 1)


@pytest.mark.parametrize("r", range(1, 13))
def test_mn_on_empty_gives_signed_hooks(r):
    expr = mn_multiply(r, s())
    assert len(expr) == r
    for lam, c in expr.items():
        assert is_hook(lam)
        assert c == (-1) ** (len(lam) - 1)


def test_character_values():
    assert character((2, 1), (1, 1, 1)) == 2
    assert character((2, 1), (3,)) == -1
    with pytest.raises(ValueError):
        character((2, 1), (2,))


def test_small_tables():
    assert char_table(1).entries == ((1,),)
    t2 = char_table(2)
    assert t2.row_order == ((2,), (1, 1))
    assert t2.entries == ((1, 1), (-1, 1))
    with pytest.raises(ValueError):
        char_table(0)


def test_s4_table_against_known_values():
    # rows and columns (4), (3,1), (2,2), (2,1,1), (1,1,1,1)
    known = (
        (1, 1, 1, 1, 1),
        (-1, 0, -1, 1, 3),
        (0, -1, 2, 0, 2),
        (1, 0, -1, -1, 3),
        (-1, 1, 1, -1, 1),
    )
    assert char_table(4).entries == known


def test_s5_table_is_orthonormal():
    t = char_table(5)
    assert len(t.row_order) == 7
    assert t.is_orthonormal()


@pytest.mark.parametrize("n", range(1, 10))
def test_orthogonality_and_dimensions(n):
    t = char_table(n)
    assert t.is_orthonormal()
    dims = t.dimensions()
    assert all(d > 0 for d in dims.values())
    assert sum(d * d for d in dims.values()) == factorial(n)


@pytest.mark.parametrize("n", range(1, 10))
def test_mn_agrees_with_newton(n):
    for mu in partitions_of(n):
        assert to_h_basis(power_to_schur(mu)) == to_h_basis(p(mu))


def test_part_order_does_not_matter():
    for mu in [(3, 2, 1), (4, 2, 2), (3, 1, 1, 1), (5, 2)]:
        expected = power_to_schur(mu)
        for order in set(permutations(mu)):
            acc = SymExpr.one("s")
            for r in order:
                acc = mn_multiply(r, acc)
            assert acc == expected


def test_table_lookup_and_json_roundtrip():
    t = char_table(5)
    assert t[(4, 1), (1, 1, 1, 1, 1)] == 4
    assert t[hook(3, 2), (5,)] == 1
    assert CharacterTable.from_dict(t.to_dict()) == t


def test_text_rendering_is_aligned():
    lines = char_table(3).to_text().splitlines()
    assert len(lines) == 4
    assert len({len(line) for line in lines}) == 1


def test_cache_writes_once_and_is_deterministic(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    first = cached_char_table(6)
    path = tmp_path / "char_table_6.json"
    raw = path.read_bytes()
    assert raw == char_table(6).to_json().encode()
    mtime = path.stat().st_mtime_ns
    assert cached_char_table(6) == first
    assert path.stat().st_mtime_ns == mtime
    assert path.read_bytes() == raw
    assert not list(tmp_path.glob("*.tmp"))


def test_cache_explicit_directory(tmp_path):
    table = cached_char_table(4, directory=tmp_path / "nested")
    assert (tmp_path / "nested" / "char_table_4.json").exists()
    assert table == char_table(4)
