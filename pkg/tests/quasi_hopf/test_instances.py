import pytest

from quasi_hopf.instances import CATALOG, build_instance, catalog, validate_instance, yd_line_modules


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_entries_validate(name):
    instance = build_instance(name, validate=False)
    report = validate_instance(instance)
    assert report.passed, report.to_text()
    assert instance.name == name


def test_catalog_builds_everything():
    instances = catalog(validate=True)
    assert list(instances) == list(CATALOG)
    assert instances["h2"].qt is None
    assert instances["kz2_rg"].qt.name == "R_g"
    assert instances["h4_l1"].qt.name == "R_1"
    assert instances["trivial"].braided[0].name == "kZ2/k"


def test_unknown_name():
    with pytest.raises(KeyError, match="unknown instance 'h8'"):
        build_instance("h8")


def test_merged_groups(kz2_rg_instance):
    report = validate_instance(kz2_rg_instance)
    groups = {entry.group for entry in report.entries}
    assert {"qbi", "qhopf", "qt", "yd"} <= groups


def test_line_modules(kz2, kz2_instance):
    names = [M.name for M in yd_line_modules(kz2)]
    assert names[:3] == ["M+/left", "M-/left", "M+M-/left"]
    assert len(names) == 9
    assert kz2_instance.module("M-/right-left").flavor == "right-left"
    with pytest.raises(KeyError):
        kz2_instance.module("M0")
