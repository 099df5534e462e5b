import pytest

from circuitwalks import BUNDLED, bundled_text, load, write_hrep


def test_bundled_names():
    assert set(BUNDLED) == {"m4", "s48", "s28", "s25"}


def test_load_by_name_and_by_path_agree(tmp_path):
    by_name = load("m4")
    f = tmp_path / "copy.hrep"
    f.write_text(bundled_text("m4"))
    assert load(str(f)) == by_name
    assert write_hrep(load(str(f))) == write_hrep(by_name)


def test_unknown_name_raises_with_options():
    with pytest.raises(KeyError) as exc:
        bundled_text("nonesuch")
    assert "m4" in str(exc.value)
    with pytest.raises((KeyError, FileNotFoundError)):
        load("nonesuch")


def test_dimensions():
    assert load("m4").dim == 4
    assert load("s48").dim == 5
    assert load("s28").dim == 5
    assert load("s25").dim == 5
