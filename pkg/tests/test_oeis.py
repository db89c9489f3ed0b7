import json

import pytest

from fcl.classf import make_classf, moments
from fcl.config import Config
from fcl.errors import NetworkDisabled, ParseError
from fcl.exactalg import Poly
from fcl.oeis import _parse_bfile, fetch, load_bundled, load_fixtures, match


def test_bundled_coverage():
    fx = load_bundled()
    assert len(fx) >= 25
    for f in fx.values():
        assert len(f.terms) >= 12
        assert f.source == "bundled"
        assert f.a_number.startswith("A") and len(f.a_number) == 7


def test_match_catalan():
    m = moments(make_classf(Poly([1, -1]), Poly.one()), 10)
    hits = match(m)
    assert ("A000108", "identity") in hits


def test_match_aerated():
    m = moments(make_classf(Poly([1, 0, -1]), Poly.one()), 12)
    assert ("A001764", "aerated") in match(m)


def test_match_signed():
    m = moments(make_classf(Poly.one(), Poly([1, -1])), 10)  # dirac(-1)
    hits = match(m)
    assert ("A000012", "signed") in hits
    assert ("A033999", "identity") in hits


def test_match_deterministic_and_sorted():
    m = moments(make_classf(Poly([1, -1]), Poly.one()), 10)
    h1, h2 = match(m), match(m)
    assert h1 == h2 == sorted(h1)


def test_match_min_overlap():
    with pytest.raises(ValueError):
        match([1, 1, 2], min_overlap=3)
    assert match([1, 1, 2, 5], min_overlap=6) == []  # too short to claim


def test_fetch_bundled_never_touches_network(monkeypatch):
    import urllib.request

    def boom(*a, **k):
        raise AssertionError("network touched for a bundled fixture")

    monkeypatch.setattr(urllib.request, "urlopen", boom)
    fx = fetch("A000108", Config(network=True))
    assert fx.source == "bundled"


def test_fetch_identifier_validation():
    with pytest.raises(ParseError):
        fetch("A0")
    with pytest.raises(ParseError):
        fetch("000108")
    with pytest.raises(ParseError):
        fetch("A00010X")


def test_fetch_network_disabled():
    with pytest.raises(NetworkDisabled):
        fetch("A999999", Config(network=False))


def test_fetch_cache_roundtrip(tmp_path, monkeypatch):
    import urllib.request

    class FakeResp:
        def __init__(self, data):
            self.data = data

        def read(self):
            return self.data

        def __enter__(self):
            return self

        def __exit__(self, *a):
            return False

    calls = []

    def fake_urlopen(url, timeout=None):
        calls.append(url)
        return FakeResp(b"# header\n0 1\n1 1\n2 2\n3 5\n4 14\n5 42\n6 132\n")

    monkeypatch.setattr(urllib.request, "urlopen", fake_urlopen)
    cfg = Config(fixtures_path=tmp_path, network=True)
    fx = fetch("A999999", cfg)
    assert fx.terms == (1, 1, 2, 5, 14, 42, 132)
    assert fx.source.startswith("fetched(")
    assert (tmp_path / "A999999.json").exists()
    # second call hits the cache, not the network
    fx2 = fetch("A999999", cfg)
    assert fx2.terms == fx.terms
    assert len(calls) == 1
    # and the cached fixture participates in lookup
    loaded = load_fixtures(cfg)
    assert "A999999" in loaded and "A000108" in loaded


def test_parse_bfile_errors():
    with pytest.raises(ParseError) as ei:
        _parse_bfile(b"0 1\nbad line here\n")
    assert ei.value.position == 4
    with pytest.raises(ParseError):
        _parse_bfile(b"0 x\n")
    with pytest.raises(ParseError):
        _parse_bfile(b"# only comments\n")


def test_triangle_rows_api():
    fx = load_bundled()["A123125"]
    rows = fx.rows()
    assert rows[0] == (1,)
    assert rows[4] == (0, 1, 11, 11, 1)
    with pytest.raises(ValueError):
        load_bundled()["A000108"].rows()
