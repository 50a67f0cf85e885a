import json
from pathlib import Path

import pytest

from aksara.corpus import (
    CorpusError,
    DocumentRecord,
    get_shingles,
    ingest,
    load_shingles,
    save_shingles,
)
from aksara.normalizer import NormalizationProfile
from aksara.shingler import ShingleParams

PROFILE = NormalizationProfile.default()


def write_corpus(tmp_path: Path, docs: dict[str, str], manifest_name="corpus.json") -> Path:
    entries = []
    for doc_id, text in docs.items():
        (tmp_path / f"{doc_id}.txt").write_text(text, encoding="utf-8")
        entries.append({"id": doc_id, "path": f"{doc_id}.txt", "title": doc_id, "language": "Sanskrit"})
    manifest = tmp_path / manifest_name
    manifest.write_text(json.dumps({"documents": entries}), encoding="utf-8")
    return manifest


def test_ingest_two_documents(tmp_path):
    manifest = write_corpus(tmp_path, {"a": "rāma rāma", "b": "sītā gacchati"})
    index = ingest(manifest)
    assert index.document_ids() == ("a", "b")
    assert index.warnings == []
    assert index.record("a") == DocumentRecord(
        id="a", path=str(tmp_path / "a.txt"), title="a", language="Sanskrit"
    )


def test_missing_file_warns_and_excludes(tmp_path):
    manifest = write_corpus(tmp_path, {"a": "rāma rāma"})
    data = json.loads(manifest.read_text())
    data["documents"].append({"id": "ghost", "path": "ghost.txt"})
    manifest.write_text(json.dumps(data), encoding="utf-8")
    index = ingest(manifest)
    assert index.document_ids() == ("a",)
    assert len(index.warnings) == 1
    assert "ghost" in index.warnings[0]


def test_malformed_entry_warns(tmp_path):
    manifest = tmp_path / "corpus.json"
    manifest.write_text(json.dumps({"documents": [{"title": "no id"}]}), encoding="utf-8")
    index = ingest(manifest)
    assert index.document_ids() == ()
    assert len(index.warnings) == 1


def test_duplicate_id_warns(tmp_path):
    manifest = write_corpus(tmp_path, {"a": "rāma"})
    data = json.loads(manifest.read_text())
    data["documents"].append(dict(data["documents"][0]))
    manifest.write_text(json.dumps(data), encoding="utf-8")
    index = ingest(manifest)
    assert index.document_ids() == ("a",)
    assert any("duplicate" in w for w in index.warnings)


def test_unreadable_manifest_fatal(tmp_path):
    with pytest.raises(CorpusError):
        ingest(tmp_path / "does-not-exist.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    with pytest.raises(CorpusError):
        ingest(bad)


def test_unknown_document_id(tmp_path):
    manifest = write_corpus(tmp_path, {"a": "rāma"})
    index = ingest(manifest)
    with pytest.raises(CorpusError):
        index.stream("zzz")


def test_shingle_cache_hit_returns_equal_set(tmp_path):
    manifest = write_corpus(tmp_path, {"a": "rāma rāma sītā"})
    index = ingest(manifest)
    params = ShingleParams(n=2)
    first = get_shingles(index, "a", params, PROFILE)
    second = get_shingles(index, "a", params, PROFILE)
    assert first is second  # memoized
    assert first == second


def test_distinct_params_distinct_entries(tmp_path):
    manifest = write_corpus(tmp_path, {"a": "rāma rāma sītā"})
    index = ingest(manifest)
    s2 = index.shingles("a", ShingleParams(n=2), PROFILE)
    s3 = index.shingles("a", ShingleParams(n=3), PROFILE)
    assert s2.params != s3.params
    assert s2.keys != s3.keys


def test_cache_round_trip(tmp_path):
    manifest = write_corpus(tmp_path, {"a": "rāma rāma sītā gacchati"})
    index = ingest(manifest)
    params = ShingleParams(n=3)
    fresh = index.shingles("a", params, PROFILE)
    save_shingles(tmp_path / "cache", fresh, PROFILE)
    loaded = load_shingles(tmp_path / "cache", "a", params, PROFILE)
    assert loaded == fresh


def test_cache_miss_returns_none(tmp_path):
    assert load_shingles(tmp_path / "cache", "a", ShingleParams(n=3), PROFILE) is None


def test_cache_transparency_through_disk(tmp_path):
    manifest = write_corpus(
        tmp_path, {"a": "satya śauca dayā kṣāṃti", "b": "satyaṃ śaucaṃ dayā"}
    )
    index = ingest(manifest)
    cache_dir = tmp_path / "cache"
    params_list = [ShingleParams(n=n) for n in (2, 3, 4, 5)]
    index.precompute(cache_dir, params_list, PROFILE)
    reloaded_index = ingest(manifest)
    for params in params_list:
        for doc_id in index.document_ids():
            from_disk = load_shingles(cache_dir, doc_id, params, PROFILE)
            fresh = reloaded_index.shingles(doc_id, params, PROFILE)
            assert from_disk == fresh


def test_reingest_determinism_byte_compare(tmp_path):
    docs = {"a": "rāma rāma sītā", "b": "satyaṃ śaucaṃ dayā"}
    manifest = write_corpus(tmp_path, docs)
    params_list = [ShingleParams(n=2)]
    dir1, dir2 = tmp_path / "c1", tmp_path / "c2"
    ingest(manifest).precompute(dir1, params_list, PROFILE)
    ingest(manifest).precompute(dir2, params_list, PROFILE)
    files1 = sorted(p.relative_to(dir1) for p in dir1.rglob("*.shingles"))
    files2 = sorted(p.relative_to(dir2) for p in dir2.rglob("*.shingles"))
    assert files1 == files2 and files1
    for rel in files1:
        assert (dir1 / rel).read_bytes() == (dir2 / rel).read_bytes()


def test_profile_affects_cache_key(tmp_path):
    manifest = write_corpus(tmp_path, {"a": "buddho buddho buddho"})
    index = ingest(manifest)
    params = ShingleParams(n=2)
    with_norm = index.shingles("a", params, PROFILE)
    without = index.shingles("a", params, NormalizationProfile.none())
    assert with_norm.keys != without.keys


def test_normalized_stream_memoized(tmp_path):
    manifest = write_corpus(tmp_path, {"a": "buddho viśe"})
    index = ingest(manifest)
    s1 = index.normalized("a", PROFILE)
    s2 = index.normalized("a", PROFILE)
    assert s1 is s2


def test_manifest_default_profile(tmp_path):
    manifest = write_corpus(tmp_path, {"a": "buddho"})
    data = json.loads(manifest.read_text())
    data["normalize"] = ["degeminate"]
    manifest.write_text(json.dumps(data), encoding="utf-8")
    index = ingest(manifest)
    assert index.default_profile == NormalizationProfile.of("degeminate")


def test_manifest_default_profile_absent_is_builtin(tmp_path):
    manifest = write_corpus(tmp_path, {"a": "buddho"})
    assert ingest(manifest).default_profile == NormalizationProfile.default()


def test_manifest_bad_profile_warns(tmp_path):
    manifest = write_corpus(tmp_path, {"a": "buddho"})
    data = json.loads(manifest.read_text())
    data["normalize"] = ["not-a-rule"]
    manifest.write_text(json.dumps(data), encoding="utf-8")
    index = ingest(manifest)
    assert index.default_profile == NormalizationProfile.default()
    assert any("normalize" in w for w in index.warnings)
