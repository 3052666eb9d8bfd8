import lcsparse
import pytest

HAND = {"products": [[{"terms": [[0, "1"], [1, "1"]]}, {"terms": [[0, "1"], [1, "4"]]}]]}


def test_conditions():
    assert lcsparse.check_kurtz([1, 3, 2])["holds"]
    assert not lcsparse.check_kurtz([1, 2, 1])["holds"]
    assert lcsparse.check_newton([6, 11, 6, 1])["holds_strict"]
    assert lcsparse.check_tau([1, 4, 4, 1], 2)["holds"]
    assert lcsparse.check_strong(["1", "2^32", "2^32", "1"])["holds"]
    assert lcsparse.sturm_distinct_real_roots(["1", "3", "2"]) == 2
    with pytest.raises(lcsparse.DegreeTooSmall):
        lcsparse.check_newton([1, 1])


def test_sps():
    assert lcsparse.expand(HAND) == ["1", "5", "2^2"]
    assert lcsparse.params(HAND) == {"k": 1, "m": 2, "t": 2, "d": 2}
    assert not lcsparse.verify_theorem2(HAND)["applicable"]
    lift = lcsparse.build_lifting(HAND)
    assert lift["lambda"] == [1, 0]
    assert lcsparse.verify_lifting(HAND)["ok"]
    assert lcsparse.bounds_report(HAND)["trivial"] == "4"
    with pytest.raises(lcsparse.PreconditionFailed):
        lcsparse.sparse_factor_witness(HAND)
    with pytest.raises(lcsparse.ParseError):
        lcsparse.expand("{}")


def test_geometry():
    assert lcsparse.orientation((0, "1", 0), (1, "2", 0), (2, "5", 0), "4") == 1
    hull = lcsparse.convex_hull_vertices([(0, "1", 0), (1, "2", 0), (2, "4", 0)], "4")
    assert hull == [(0, "1", 0), (2, "2^2", 0)]
    size, witness = lcsparse.max_convex_chain([(0, "1", 0), (0, "2", 0), (1, "1", 0), (1, "2", 0)], "4")
    assert size == 4 and len(witness) == 4
    assert len(lcsparse.minkowski_sum([(0, "1", 0), (1, "2", 0)], [(0, "1", 0), (2, "4", 0)])) == 4


def test_families():
    assert lcsparse.gen_g(2, "1") == ["1", "2^2", "2^2", "1"]
    assert lcsparse.gen_f(2) == ["1", "2^32", "2^32", "1"]
    assert lcsparse.check_g(5, "7")
    assert lcsparse.gen_h(2)[1] == ("10", "00000100")
    assert lcsparse.verify_substitution_identity(3)["equal"]


def test_cli():
    code, out, _ = lcsparse.run_cli(["verify-identity", "--n", "2"])
    assert code == 0 and '"equal": true' in out
    code, _, _ = lcsparse.run_cli(["gen-f", "--n", "99"])
    assert code == 2
