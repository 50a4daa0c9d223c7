"""Smoke tests for the _anglerig extension module."""

import _anglerig as ar

K4_MONO = "4 1\n" + "".join(f"{u} {v} 1\n" for u in range(1, 5) for v in range(u + 1, 5))
K4_BI = "4 2\n1 2 2\n" + "".join(
    f"{u} {v} 1\n" for u in range(1, 5) for v in range(u + 1, 5) if (u, v) != (1, 2)
)


def test_validate():
    assert ar.validate(K4_MONO) == ""
    assert "gap" in ar.validate("3 3\n1 2 1\n2 3 1\n1 3 3\n")


def test_check_verdicts():
    mono = ar.check(K4_MONO)
    assert mono["rank"] == 5
    assert mono["infinitesimally_angle_rigid"]  # rigid as a framework ...
    assert not mono["independent"]              # ... but carries a stress
    assert not mono["minimally_angle_rigid"]

    bi = ar.check(K4_BI)
    assert bi["rank"] == 6
    assert bi["minimally_angle_rigid"]


def test_pebble_game():
    k4 = [(u, v) for u in range(1, 5) for v in range(u + 1, 5)]
    assert ar.r2_rank(4, k4) == 5
    assert ar.is_laman(3, [(1, 2), (2, 3), (1, 3)])


def test_two_color_predicate_and_construction():
    assert ar.two_color_rigid(K4_BI)
    assert not ar.maxwell_ok(K4_MONO)
    assert ar.maxwell_ok(K4_BI)
    seq = ar.construct_sequence_json(K4_BI)
    assert '"steps": []' in seq


def test_canonical_classes():
    bases = ar.k4_base_cases()
    assert len(bases) == 5
    assert len({ar.canonical_form(b) for b in bases}) == 5


def test_small_table_row():
    row = ar.count_k_color_rigid(4, 2)
    assert row["graphs"] == 1
    assert row["rigid_colored_total"] == 5


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"PASS {name}")
            except AssertionError as err:
                failures += 1
                print(f"FAIL {name}: {err}")
    raise SystemExit(1 if failures else 0)
