import mappell


def test_ff_basis_eval():
    p = mappell.ff_basis(3, "1")
    # x(x-1)(x-2) at x = 5
    assert p.eval("5") == "60"
    assert p.to_monomial() == ["0", "2", "-3", "1"]


def test_from_monomial_roundtrip():
    p = mappell.from_monomial(["1", "0", "1"], "1/2")
    assert p.eval("3") == "10"
    # forward divided difference with step 1/2: (p(1/2) - p(0)) / (1/2)
    assert p.delta().eval("0") == "1/2"


def test_charlier_agreement():
    n = [2, 1]
    a = ["1", "2"]
    assert mappell.charlier(n, a) == mappell.charlier_genfunc(n, a, 6)


def test_charlier_known_value():
    # C_{(1,0)}^{(1,2)}(x) = x - 1
    p = mappell.charlier([1, 0], ["1", "2"])
    assert p.to_monomial() == ["-1", "1"]


def test_moment():
    assert mappell.moment("3", mappell.ff_basis(4, "1")) == "81"


def test_verify_suite_passes():
    records = mappell.verify_suite("difference", 4, ["1", "2"])
    assert records
    assert all(r["verdict"] == "pass" for r in records)


def test_appell_family():
    fam = mappell.appell_family("1", 2, 3, {(0, 0): "1"}, 3)
    assert fam[(2, 1)] == mappell.ff_basis(3, "1")


def test_recurrence_table():
    rows = mappell.charlier_recurrence_table(["1", "2"], 3)
    by_n = {tuple(r["n"]): r for r in rows}
    assert by_n[(1, 1)]["E"] == "3"
    assert by_n[(1, 1)]["lower"] == ["1", "2"]
