import pytest
from fastapi.testclient import TestClient

from comptext.overview import build_timeline, build_wordcloud
from comptext.schemas import (
    CorpusSummary,
    ShiftReportOut,
    TimelineOut,
    WordCloudGraphOut,
)
from comptext.server import create_app
from comptext.shifts import build_report


@pytest.fixture(scope="module")
def client(store):
    return TestClient(create_app(store))


class TestCorpora:
    def test_empty_store_yields_empty_list(self, store):
        from comptext.workspace import WorkspaceStore

        empty = WorkspaceStore(corpora={}, lexicon=store.lexicon, loaded_at=0.0)
        with TestClient(create_app(empty)) as empty_client:
            assert empty_client.get("/api/corpora").json() == []

    def test_entries_sorted_by_order_key(self, client, store):
        body = client.get("/api/corpora").json()
        assert [c["id"] for c in body] == ["alpha", "bravo", "charlie"]
        expected = [
            CorpusSummary.from_workspace_corpus(c).model_dump(mode="json")
            for c in store.by_order_key()
        ]
        assert body == expected

    def test_totals_expose_both_distributions(self, client):
        body = client.get("/api/corpora").json()
        for entry in body:
            assert entry["sentiment_token_total"] <= entry["token_total"]


class TestWordcloud:
    def test_payload_equals_library_call(self, client, store):
        body = client.get("/api/wordcloud", params={"m": 4}).json()
        graph = build_wordcloud(store.annotated_corpora(), m=4)
        assert body == WordCloudGraphOut.from_graph(graph).model_dump(mode="json")

    def test_ranking_parameter(self, client, store):
        body = client.get(
            "/api/wordcloud", params={"m": 2, "ranking": "aggregate"}
        ).json()
        graph = build_wordcloud(store.annotated_corpora(), m=2, ranking="aggregate")
        assert body == WordCloudGraphOut.from_graph(graph).model_dump(mode="json")

    def test_invalid_m_is_400(self, client):
        assert client.get("/api/wordcloud", params={"m": 0}).status_code == 400
        assert client.get("/api/wordcloud", params={"m": "soup"}).status_code == 400

    def test_unknown_ranking_is_400(self, client):
        response = client.get("/api/wordcloud", params={"ranking": "vibes"})
        assert response.status_code == 400


class TestShift:
    @pytest.mark.parametrize("measure", ["proportion", "entropy", "divergence"])
    def test_payload_equals_library_call(self, client, store, measure):
        body = client.get(
            "/api/shift",
            params={"ref": "alpha", "comp": "bravo", "measure": measure, "k": 5},
        ).json()
        report = build_report(
            measure,
            store.get("alpha").distribution(),
            store.get("bravo").distribution(),
            k=5,
            ref_id="alpha",
            comp_id="bravo",
        )
        assert body == ShiftReportOut.from_report(report).model_dump(mode="json")

    def test_self_comparison_is_all_zeros(self, client):
        body = client.get(
            "/api/shift",
            params={"ref": "alpha", "comp": "alpha", "measure": "proportion"},
        ).json()
        assert all(item["contribution"] == 0.0 for item in body["items"])

    def test_filter_false_uses_raw_distributions(self, client, store):
        body = client.get(
            "/api/shift",
            params={
                "ref": "alpha",
                "comp": "bravo",
                "measure": "proportion",
                "filter": "false",
            },
        ).json()
        report = build_report(
            "proportion",
            store.get("alpha").distribution(sentiment_filter=False),
            store.get("bravo").distribution(sentiment_filter=False),
            ref_id="alpha",
            comp_id="bravo",
        )
        assert body == ShiftReportOut.from_report(report).model_dump(mode="json")

    def test_unknown_corpus_is_404(self, client):
        response = client.get(
            "/api/shift",
            params={"ref": "alpha", "comp": "missing", "measure": "proportion"},
        )
        assert response.status_code == 404

    def test_invalid_measure_is_400(self, client):
        response = client.get(
            "/api/shift", params={"ref": "alpha", "comp": "bravo", "measure": "magic"}
        )
        assert response.status_code == 400

    def test_invalid_k_is_400(self, client):
        for bad_k in ("0", "-3", "many"):
            response = client.get(
                "/api/shift",
                params={
                    "ref": "alpha",
                    "comp": "bravo",
                    "measure": "proportion",
                    "k": bad_k,
                },
            )
            assert response.status_code == 400

    def test_no_common_support_is_422(self, client):
        response = client.get(
            "/api/shift",
            params={"ref": "alpha", "comp": "charlie", "measure": "divergence"},
        )
        assert response.status_code == 422
        assert "no common vocabulary" in response.json()["detail"]

    def test_identical_requests_return_identical_bodies(self, client):
        params = {"ref": "bravo", "comp": "alpha", "measure": "divergence", "k": 3}
        first = client.get("/api/shift", params=params)
        second = client.get("/api/shift", params=params)
        assert first.content == second.content


class TestTimeline:
    def test_payload_equals_library_call(self, client, store):
        body = client.get("/api/timeline").json()
        expected = TimelineOut.from_points(build_timeline(store.annotated_corpora()))
        assert body == expected.model_dump(mode="json")

    def test_points_ascending_by_order_key(self, client):
        points = client.get("/api/timeline").json()["points"]
        keys = [p["order_key"] for p in points]
        assert keys == sorted(keys)

    def test_single_corpus_store(self, tmp_path, workspace_dir, lexicon_path):
        import shutil

        from comptext.workspace import WorkspaceStore

        work = tmp_path / "ws"
        work.mkdir()
        shutil.copytree(workspace_dir / "charlie", work / "charlie")
        single = WorkspaceStore.load(work, lexicon_path)
        with TestClient(create_app(single)) as one_client:
            points = one_client.get("/api/timeline").json()["points"]
        assert len(points) == 1
        assert points[0]["corpus_id"] == "charlie"


def test_startup_rejects_colliding_order_keys(tmp_path, workspace_dir, lexicon_path):
    import json
    import shutil

    from comptext.errors import DuplicateOrderKeyError
    from comptext.workspace import WorkspaceStore

    work = tmp_path / "ws"
    shutil.copytree(workspace_dir, work)
    manifest = json.loads((work / "bravo" / "corpus.json").read_text())
    manifest["order_key"] = 1
    (work / "bravo" / "corpus.json").write_text(json.dumps(manifest))
    store = WorkspaceStore.load(work, lexicon_path)
    with pytest.raises(DuplicateOrderKeyError):
        create_app(store)
