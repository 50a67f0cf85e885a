import json

import pytest
from fastapi.testclient import TestClient

from aksara.aligner import compare, report_to_dict
from aksara.graph import minimum_spanning_tree, tree_to_dict
from aksara.normalizer import NormalizationProfile
from aksara.server import create_app
from aksara.shingler import ShingleParams
from aksara.similarity import similarity_matrix

PROFILE = NormalizationProfile.default()


@pytest.fixture(scope="module")
def client(sample_index):
    return TestClient(create_app(sample_index))


# -- oracle: every endpoint equals the direct library call -------------------


def test_corpus_endpoint_matches_records(client, sample_index):
    body = client.get("/api/corpus").json()
    assert [d["id"] for d in body["documents"]] == list(sample_index.document_ids())
    raghu = next(d for d in body["documents"] if d["id"] == "raghu")
    rec = sample_index.record("raghu")
    assert raghu["title"] == rec.title
    assert raghu["language"] == rec.language
    assert raghu["century"] == rec.century


def test_document_endpoint_matches_stream(client, sample_index):
    body = client.get("/api/document/raghu").json()
    stream = sample_index.stream("raghu")
    assert body["text"] == stream.text
    assert [a["surface"] for a in body["aksaras"]] == list(stream.surfaces())
    assert [(a["start"], a["end"]) for a in body["aksaras"]] == [
        tuple(a.span) for a in stream.aksaras
    ]


def test_matrix_endpoint_matches_library(client, sample_index):
    body = client.get("/api/matrix?metric=dice&n=4").json()
    expected = similarity_matrix(sample_index, ShingleParams(n=4), PROFILE, "dice")
    assert body == json.loads(json.dumps(expected.to_dict()))


def test_mst_endpoint_matches_library(client, sample_index):
    body = client.get("/api/mst?metric=dice&n=4").json()
    matrix = similarity_matrix(sample_index, ShingleParams(n=4), PROFILE, "dice")
    expected = tree_to_dict(minimum_spanning_tree(matrix, sample_index.records))
    assert body == json.loads(json.dumps(expected))


def test_compare_endpoint_matches_library(client, sample_index):
    body = client.get("/api/compare?a=raghu&b=anon1&n=4").json()
    report = report_to_dict(
        compare(sample_index, "raghu", "anon1", ShingleParams(n=4), PROFILE)
    )
    for key, value in report.items():
        assert body[key] == json.loads(json.dumps(value))
    assert body["textA"] == sample_index.text("raghu")


def test_compare_endpoint_known_shared_keys(client):
    body = client.get("/api/compare?a=raghu&b=anon1&n=4").json()
    assert {m["key"] for m in body["matches"]} == {
        "nuktopibu", "ktopibudho", "pibudhovi", "budhoviśe",
    }


def test_mst_two_special_modes(client, sample_index):
    body = client.get("/api/mst?metric=dice&n=2&mode=skip&k=1").json()
    matrix = similarity_matrix(
        sample_index, ShingleParams(n=2, mode="skip", k=1), PROFILE, "dice"
    )
    expected = tree_to_dict(minimum_spanning_tree(matrix, sample_index.records))
    assert body == json.loads(json.dumps(expected))


# -- validation and errors ---------------------------------------------------


def test_invalid_n_gets_400(client):
    r = client.get("/api/matrix?n=0")
    assert r.status_code == 400
    body = r.json()
    assert body["code"] == "invalid-n"
    assert body["status"] == 400
    assert body["message"]


def test_invalid_mode_gets_400(client):
    r = client.get("/api/matrix?n=4&mode=sliding")
    assert r.status_code == 400
    assert r.json()["code"] == "invalid-mode"


def test_invalid_k_gets_400(client):
    r = client.get("/api/mst?n=2&mode=skip&k=0")
    assert r.status_code == 400
    assert r.json()["code"] == "invalid-k"


def test_non_integer_n_gets_400(client):
    r = client.get("/api/matrix?n=four")
    assert r.status_code == 400
    assert r.json()["code"] == "invalid-n"


def test_invalid_metric_gets_400(client):
    r = client.get("/api/matrix?metric=cosine&n=4")
    assert r.status_code == 400
    assert r.json()["code"] == "invalid-metric"


def test_oversized_skip_bundle_gets_400(client):
    r = client.get("/api/matrix?n=40&mode=skip&k=3")
    assert r.status_code == 400
    assert r.json()["code"] == "invalid-params"


def test_unknown_document_gets_404(client):
    r = client.get("/api/document/nope")
    assert r.status_code == 404
    assert r.json()["code"] == "unknown-document"
    r = client.get("/api/compare?a=raghu&b=nope&n=4")
    assert r.status_code == 404


def test_missing_compare_ids_gets_400(client):
    r = client.get("/api/compare?n=4")
    assert r.status_code == 400
    assert r.json()["code"] == "missing-document"


# -- caching and statics -----------------------------------------------------


def test_identical_queries_byte_identical(client):
    first = client.get("/api/matrix?metric=dice&n=3").content
    second = client.get("/api/matrix?metric=dice&n=3").content
    assert first == second


def test_root_serves_fallback_without_ui(client):
    r = client.get("/")
    assert r.status_code == 200
    assert "aksara" in r.text


def test_assets_404_without_ui(client):
    assert client.get("/assets/main.js").status_code == 404


def test_mst_two_document_corpus(tmp_path):
    from aksara.corpus import ingest

    for doc_id, text in (("a", "rāma rāma sītā"), ("b", "rāma rāma gītā")):
        (tmp_path / f"{doc_id}.txt").write_text(text, encoding="utf-8")
    (tmp_path / "corpus.json").write_text(
        json.dumps(
            {
                "documents": [
                    {"id": "a", "path": "a.txt"},
                    {"id": "b", "path": "b.txt"},
                ]
            }
        ),
        encoding="utf-8",
    )
    client = TestClient(create_app(ingest(tmp_path / "corpus.json")))
    body = client.get("/api/mst?n=2&metric=dice").json()
    assert len(body["nodes"]) == 2
    assert len(body["edges"]) == 1


def test_static_dir_served(sample_index, tmp_path):
    (tmp_path / "assets").mkdir()
    (tmp_path / "index.html").write_text("<html><body>explorer</body></html>")
    (tmp_path / "assets" / "main.js").write_text("console.log('ok')")
    client = TestClient(create_app(sample_index, static_dir=tmp_path))
    assert "explorer" in client.get("/").text
    assert client.get("/assets/main.js").status_code == 200
    assert client.get("/assets/../index.html").status_code in (400, 404)
