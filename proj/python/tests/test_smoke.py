import csv
import io
import json

import pytest

import surdsym


def test_worked_example():
    r = surdsym.classify((2, -1, -3))
    assert r.gamma == [1, 1, 3]
    assert r.t == 10
    assert (r.t_up, r.t_down) == (5, 5)
    assert r.symmetry == surdsym.SymmetryType.Supersymmetric
    assert r.symmetry.label == "super"
    assert surdsym.modular_expansion((2, 4, -7)) == ([], [3, 5, 3, 2, 2])
    forms, modular = surdsym.reduced_cycle(surdsym.Form(2, 4, -7))
    assert len(forms) == 5
    assert surdsym.is_rotation_of(modular, [3, 5, 3, 2, 2])
    assert surdsym.cf_period_to_modular_period([1, 1, 3, 1, 1, 3]) == [3, 5, 3, 2, 2]
    assert surdsym.modular_period_to_cf_period([3, 5, 3, 2, 2]) == [1, 1, 3, 1, 1, 3]


def test_form_object():
    f = surdsym.Form(5, -7, 9)
    assert f.discriminant == 221
    assert f.as_tuple() == (5, -7, 9)
    assert f == surdsym.Form(5, -7, 9)
    assert len({f, surdsym.Form(5, -7, 9)}) == 1
    assert surdsym.classify(f).symmetry == surdsym.SymmetryType.MPlusNSymmetric


def test_square_class():
    r = surdsym.classify((1, 0, 3))
    assert r.square
    assert r.cf_k_over_m == [3]
    assert (r.t, r.t_up, r.t_down) == (2, 1, 0)
    assert r.symmetry == surdsym.SymmetryType.KSymmetric


def test_oracles_agree():
    for f in surdsym.enumerate_classes(148):
        r = surdsym.classify(f)
        assert surdsym.verify_symmetry(f) == r.symmetry
        tally = surdsym.verify_counts(f)
        assert tally["H0"] == r.t


def test_reduce_and_orbit():
    out = surdsym.reduce((5, 7, 22))
    assert out["involution"] == "conjugate"
    g = out["form"]
    assert g.m * g.n <= 0
    assert g.discriminant == 344
    orbit = surdsym.orbit((5, -3, -13), 50)
    assert surdsym.Form(3, -5, 13) in orbit


def test_tables():
    reports = surdsym.table(100, "zero")
    assert len(reports) == 55
    rows = list(csv.DictReader(io.StringIO(surdsym.render_table(100, "nonzero", "csv", 2))))
    assert len(rows) == 83
    assert rows[0]["gamma"] == "[1]"
    records = json.loads(surdsym.render_stats(200, "json"))
    for rec in records:
        counts = [rec[k] for k in ("asymm", "k", "mpn", "anti", "super")]
        assert sum(counts) == rec["total"]


def test_big_integers_round_trip():
    big = 10**30
    f = surdsym.Form(big, -1, 1)
    assert f.m == big
    assert surdsym.discriminant(f) == 1 + 4 * big


def test_errors():
    with pytest.raises(surdsym.DomainError):
        surdsym.classify((1, 1, 1))
    with pytest.raises(ValueError):
        surdsym.modular_expansion((1, 0, 3))
    with pytest.raises(ValueError):
        surdsym.table(10, "none")
    with pytest.raises(OverflowError):
        surdsym.discriminant((10**40, 10**40, 1))
