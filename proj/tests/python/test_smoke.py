import skeinlab as sk


def test_jones_trefoil():
    trefoil = sk.from_braid([1, 1, 1])
    assert trefoil.classical == 3
    assert trefoil.writhe() == 3
    v = sk.jones(trefoil)
    assert v["jones"]["text"] == "-t^4 + t^3 + t"
    assert v["f"]["text"] == "A^-4 + A^-12 - A^-16"
    assert v["bracket"]["text"] == "-A^5 - A^-3 + A^-7"


def test_gauss_and_arrow():
    vt = sk.from_gauss("O1+O2+U1+U2+")
    assert vt.classical == 2 and vt.virtuals == 1
    arrow = sk.arrow(vt)
    assert "K1" in arrow["raw"]["vars"]


def test_codecs_round_trip():
    trefoil = sk.from_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
    again = sk.from_gauss(trefoil.gauss())
    assert again.isomorphic_to(trefoil)


def test_alexander_conway_homflypt():
    f8 = sk.from_braid([1, -2, 1, -2])
    assert sk.alexander(f8)["text"] == "t - 3 + t^-1"
    trefoil = sk.from_braid([1, 1, 1])
    assert sk.conway(trefoil)["text"] == "z^2 + 1"
    assert sk.homflypt(trefoil)["text"] == "a^-2 z^2 + 2 a^-2 - a^-4"


def test_khovanov_table():
    table = sk.khovanov(sk.from_braid([1, 1, 1]))["table"]
    entries = {(row["i"], row["j"]): (row["free"], list(row["torsion"])) for row in table}
    assert entries == {
        (0, 1): (1, []),
        (0, 3): (1, []),
        (2, 5): (1, []),
        (3, 7): (0, ["2"]),
        (3, 9): (1, []),
    }


def test_vassiliev_and_moves():
    f8 = sk.from_braid([1, -2, 1, -2])
    assert sk.vassiliev_coeffs(f8, 2) == ["1", "0", "3"]
    moved = sk.random_reidemeister_moves(f8, moves=15, seed=7)
    assert sk.jones(moved)["jones"]["text"] == sk.jones(f8)["jones"]["text"]


def test_axioms_and_errors():
    assert all(sk.verify_tensor_axioms().values())
    try:
        sk.from_gauss("O1+O2+")
    except sk.SkeinError as e:
        assert "InconsistentCode" in str(e)
    else:
        raise AssertionError("expected SkeinError")
