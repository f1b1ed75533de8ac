import io
import math
from fractions import Fraction

import pytest

from spectral3 import bench
from spectral3.oracle import CASE_I, CriticalCase, case_ii, sweep_grid


def rows_by_quantity(records):
    return {(r.method, r.quantity): r for r in records}


def test_header_and_format():
    out = io.StringIO()
    bench.write_csv(bench.run_sweep("delta", CASE_I, ["sop"], [1e-3]), out)
    lines = out.getvalue().split("\n")
    assert lines[0] == "case,transform,gamma,method,delta,quantity,computed,reference,abs_error"
    assert lines[-1] == "" and "\r" not in out.getvalue()
    first = lines[1].split(",")
    assert first[:5] == ["delta", "case1", "", "sop", "0.001"]


def test_all_quantities_per_point():
    records = bench.run_point("delta", CASE_I, "sop", 1e-3)
    assert sorted(r.quantity for r in records) == sorted(bench.QUANTITIES)


def test_rows_sorted_and_deterministic():
    grid = sweep_grid(1e-6, 1e-2, 1)
    a = bench.run_sweep("deltaq", case_ii(1e-2), ["sop", "naive"], grid)
    b = bench.run_sweep("deltaq", case_ii(1e-2), ["naive", "sop"], list(reversed(grid)))
    assert [r.sort_key() for r in a] == sorted(r.sort_key() for r in a)
    sa, sb = io.StringIO(), io.StringIO()
    bench.write_csv(a, sa)
    bench.write_csv(b, sb)
    assert sa.getvalue() == sb.getvalue()
    assert all(r.gamma == 1e-2 for r in a)


def test_abs_error_is_exact_difference_of_emitted_values():
    for case in CriticalCase:
        for r in bench.run_sweep(case, CASE_I, ["sop", "naive"], sweep_grid(1e-12, 1e-1, 1)):
            assert math.isfinite(r.abs_error) and r.abs_error >= 0
            row = r.row()
            computed, reference, err = (float(x) for x in row[6:9])
            assert err == float(abs(Fraction(computed) - Fraction(reference)))


def test_sop_discriminant_at_small_distance():
    r = rows_by_quantity(bench.run_point("delta", CASE_I, "sop", 1e-10))[("sop", "Delta")]
    assert 1e-19 < r.reference < 1e-18
    assert r.abs_error < 1e-6 * r.reference


def test_naive_discriminant_is_noise():
    r = rows_by_quantity(bench.run_point("delta", CASE_I, "naive", 1e-10))[("naive", "Delta")]
    # total cancellation: the computed value carries no information about Delta
    assert r.computed == 0.0 or r.abs_error > 1e-16
    assert r.abs_error >= 0.9 * r.reference


def test_naive_deltap_computes_zero():
    r = rows_by_quantity(bench.run_point("deltap", CASE_I, "naive", 1e-10))[("naive", "Delta_p")]
    assert r.computed == 0.0
    assert r.abs_error == r.reference > 0


def test_complex_rounded_matrix_skips_eigen_rows(caplog):
    records = bench.run_point("deltap", case_ii(1e-3), "sop", 1e-14)
    assert sorted(r.quantity for r in records) == ["Delta", "Delta_p", "Delta_q", "I1"]
    assert "complex pair" in caplog.text


def test_unknown_method():
    with pytest.raises(ValueError):
        bench.run_sweep("delta", CASE_I, ["qr"], [1e-3])
