import math
import os
import sys

import pytest

core_dir = os.environ.get("SQUAREPEG_CORE_DIR")
if core_dir:
    sys.path.insert(0, core_dir)

_core = pytest.importorskip("_core")


def test_disk_basics():
    disk = _core.make_disk(1.0, 256)
    assert len(disk) == 256
    assert disk.area == pytest.approx(math.pi, rel=1e-3)
    assert disk.diameter == pytest.approx(2.0, rel=1e-3)
    assert _core.classify_point(disk, 0.0, 0.0) == "interior"
    assert _core.classify_point(disk, 3.0, 0.0) == "exterior"


def test_obtuseness_verdicts():
    assert _core.is_obtuse(_core.make_regular_ngon(5))["obtuse"]
    assert not _core.is_obtuse(_core.make_regular_ngon(4))["obtuse"]


def test_f_delta_and_s_star():
    disk = _core.make_disk(1.0, 256)
    value, cert = _core.f_delta(disk, 0.0, 0.0, 1e-3)
    assert value == pytest.approx(1.0, rel=1e-2)
    assert cert is not None
    assert _core.s_star(disk, grid=24) == pytest.approx(1.0, abs=0.05)


def test_trivial_square_roundtrip():
    square = _core.make_polygon([(0, 0), (1, 0), (1, 1), (0, 1)])
    verdict = _core.find_trivial_square(square, 0.5)
    assert verdict["trivial"]
    assert verdict["witness"] is not None

    witness = _core.trivial_square_at(square, 0.0, 0.0, 1.0)
    assert witness["side"] == pytest.approx(1.0)


def test_pipeline_on_disk():
    disk = _core.make_disk(1.0, 256)
    result = _core.inscribe_via_table(disk)
    assert result["square"]["side"] == pytest.approx(math.sqrt(2.0), rel=1e-2)
    assert result["max_boundary_distance"] < 1e-2

    report = _core.verify_inscribed(disk, 0.0, 0.0, math.sqrt(2.0), 0.0, 1e-3)
    assert report["pass"]


def test_exceptions_map_to_python():
    with pytest.raises(_core.NotObtuseError):
        _core.inscribe_via_table(_core.make_regular_ngon(4))
    with pytest.raises(_core.ArcTooWideError):
        pent = _core.make_regular_ngon(5)
        x, y = pent.vertices[0]
        _core.trivial_square_at(pent, x, y, 1.0)
    assert issubclass(_core.NotObtuseError, _core.SquarepegError)
