"""Acceptance criteria, one test per item.

Each test runs a suite item at its exact tolerance (all checks are exact
rational or integer equalities), prints the PASS/FAIL line and asserts.
Run with -s to see the lines; the same items back the paper-suite
command of the CLI.
"""

import pytest

from borel_orbits.suite import DEFAULT_SEED, ITEMS

_BY_NUM = {num: (name, fn) for num, name, fn in ITEMS}


def _run(num):
    name, fn = _BY_NUM[num]
    ok, detail = fn(DEFAULT_SEED)
    print(f"{'PASS' if ok else 'FAIL'} {num:>2} {name}: {detail}")
    assert ok, f"criterion {num} ({name}): {detail}"


def test_criterion_01_shape331_orbit_count():
    _run("1")


def test_criterion_02_g2_maximal_ideal():
    _run("2")


def test_criterion_03_canonical_sets():
    _run("3")


def test_criterion_04_pyasetskii_duality():
    _run("4")


def test_criterion_05_anr_tables():
    _run("5")


def test_criterion_06_c_symmetry():
    _run("6")


def test_criterion_07_krull_dimensions():
    _run("7")


def test_criterion_08_borel_index_dim_estimate():
    _run("8")


def test_criterion_09_d4_counterexample():
    _run("9")


def test_criterion_10_conjecture_evidence():
    _run("10")


def test_criterion_11_normal_form_properties():
    _run("11")


def test_criterion_12_structural_properties():
    _run("12")


def test_suite_runner_reports_all_pass(capsys):
    from borel_orbits import suite
    # item 9 is cheap and representative; the full run happens above
    assert suite.run(only="9")
    out = capsys.readouterr().out
    assert out.startswith("PASS")
