import json
import os
import warnings

import pytest

from spl import groebner
from spl.cache import CacheWarning, DiskCache
from spl.catalog import build


def _gb(cache, cid="a3"):
    groebner.clear_memo()
    with cache.scope():
        return build(cid).ideal.gb().basis


def test_put_then_hit(tmp_path):
    c = DiskCache(tmp_path)
    cold = _gb(c)
    assert c.misses == 1 and c.hits == 0 and list(tmp_path.glob("*.json"))
    warm = _gb(c)
    assert c.hits == 1 and warm == cold


def test_key_is_64_hex(tmp_path):
    c = DiskCache(tmp_path)
    _gb(c)
    (f,) = tmp_path.glob("*.json")
    assert len(f.stem) == 64 and int(f.stem, 16) >= 0
    entry = json.loads(f.read_text())
    assert entry["key"] == f.stem and entry["order"] == "grevlex"


def test_truncated_entry_recomputed(tmp_path):
    c = DiskCache(tmp_path)
    cold = _gb(c)
    (f,) = tmp_path.glob("*.json")
    f.write_text(f.read_text()[:20])
    again = _gb(c)
    assert again == cold
    # the corrupt file was replaced by a fresh entry
    assert json.loads(f.read_text())["basis"]


def test_garbled_polynomial_recomputed(tmp_path):
    c = DiskCache(tmp_path)
    cold = _gb(c)
    (f,) = tmp_path.glob("*.json")
    entry = json.loads(f.read_text())
    entry["basis"][0] = "x +* y"
    f.write_text(json.dumps(entry))
    assert _gb(c) == cold


def test_other_tool_version_ignored(tmp_path):
    c = DiskCache(tmp_path)
    cold = _gb(c)
    (f,) = tmp_path.glob("*.json")
    entry = json.loads(f.read_text())
    entry["tool_version"] = "0.0.0-other"
    f.write_text(json.dumps(entry))
    c2 = DiskCache(tmp_path)
    assert _gb(c2) == cold and c2.hits == 0


def test_unwritable_dir_warns_once(tmp_path):
    if os.geteuid() == 0:
        target = "/proc/spl-cache-cannot-exist"
    else:
        ro = tmp_path / "ro"
        ro.mkdir()
        ro.chmod(0o500)
        target = ro / "sub"
    c = DiskCache(target)
    with warnings.catch_warnings(record=True) as rec:
        warnings.simplefilter("always")
        a = _gb(c, "a3")
        b = _gb(c, "b3:2")
    assert a and b and c.disabled
    assert sum(issubclass(w.category, CacheWarning) for w in rec) == 1


def test_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv("SPL_CACHE_DIR", str(tmp_path / "env"))
    assert DiskCache().root == tmp_path / "env"
