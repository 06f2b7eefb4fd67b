import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from comptext.errors import CorpusNotFoundError, DuplicateDocumentError, ManifestError
from comptext.ingest import (
    TokenDistribution,
    build_distribution,
    corpus_tokens,
    load_corpus,
    load_stopwords,
    tokenize,
)


class TestTokenize:
    def test_punctuation_stripped(self):
        assert tokenize("Thank you, America!") == ["thank", "you", "america"]

    def test_phrase_merging(self):
        assert tokenize("The United States stands", {"united states"}) == [
            "the",
            "united states",
            "stands",
        ]

    def test_empty_text(self):
        assert tokenize("") == []

    def test_intra_word_apostrophe_and_hyphen_kept(self):
        assert tokenize("Don't under-estimate plain-spoken folks") == [
            "don't",
            "under-estimate",
            "plain-spoken",
            "folks",
        ]

    def test_leading_trailing_punctuation_dropped(self):
        assert tokenize("'tis -- a 'quoted' word-") == ["tis", "a", "quoted", "word"]

    def test_numbers_without_letters_dropped(self):
        assert tokenize("In 2024 we won 51 states, covid-19 ended") == [
            "in",
            "we",
            "won",
            "states",
            "covid-19",
            "ended",
        ]

    def test_curly_apostrophe_treated_as_ascii(self):
        assert tokenize("don’t stop") == ["don't", "stop"]

    def test_longest_phrase_wins(self):
        phrases = {"united states", "united states of america"}
        assert tokenize("the united states of america endures", phrases) == [
            "the",
            "united states of america",
            "endures",
        ]

    def test_phrase_merges_across_stripped_punctuation(self):
        # punctuation is removed before merging, so the pair still joins;
        # anything else would break idempotence of tokenize on its output
        assert tokenize("united, states", {"united states"}) == ["united states"]

    @given(st.text(max_size=200))
    def test_idempotent_on_own_output(self, text):
        tokens = tokenize(text, {"united states"})
        assert tokenize(" ".join(tokens), {"united states"}) == tokens

    @given(st.text(alphabet="abcdefg ',.-!", max_size=120))
    def test_phrase_merging_only_regroups(self, text):
        plain = tokenize(text)
        merged = tokenize(text, {"a b", "c d e"})
        assert sorted("".join(plain)) == sorted("".join(merged).replace(" ", ""))


class TestBuildDistribution:
    def test_counts_and_total(self):
        dist = build_distribution(["a", "b", "a"])
        assert dist.counts == {"a": 2, "b": 1}
        assert dist.total == 3
        assert dist.frequency("a") == pytest.approx(2 / 3)

    def test_stopwords_excluded_before_counting(self):
        dist = build_distribution(["the", "great", "the"], {"the"})
        assert dist.counts == {"great": 1}
        assert dist.total == 1

    def test_empty_input(self):
        dist = build_distribution([])
        assert dist.total == 0
        assert dist.vocabulary == frozenset()

    def test_all_stopwords(self):
        dist = build_distribution(["the", "the"], {"the"})
        assert dist.total == 0

    @given(
        st.lists(st.sampled_from("abcde"), max_size=60),
        st.sets(st.sampled_from("abcde")),
    )
    def test_total_counts_non_stopword_tokens(self, tokens, stopwords):
        dist = build_distribution(tokens, stopwords)
        assert dist.total == sum(1 for t in tokens if t not in stopwords)

    @given(st.lists(st.sampled_from(["x", "y", "z", "w"]), min_size=1, max_size=80))
    def test_frequencies_sum_to_one(self, tokens):
        dist = build_distribution(tokens)
        assert sum(dist.frequency(t) for t in dist.vocabulary) == pytest.approx(
            1.0, abs=1e-12
        )

    def test_from_counts_rejects_negative(self):
        with pytest.raises(ValueError):
            TokenDistribution.from_counts({"a": -1})

    def test_from_counts_drops_zero_entries(self):
        dist = TokenDistribution.from_counts({"a": 2, "b": 0})
        assert dist.vocabulary == {"a"}


class TestLoadCorpus:
    def test_fixture_corpus(self, workspace_dir):
        corpus = load_corpus(workspace_dir / "alpha")
        assert corpus.id == "alpha"
        assert corpus.label == "President Alpha"
        assert corpus.order_key == 1
        assert [d.id for d in corpus.documents] == ["alpha-2017", "alpha-2018"]
        assert corpus.documents[0].source == "archive"
        assert corpus.documents[1].source is None

    def test_document_order_is_manifest_order(self, workspace_dir):
        corpus = load_corpus(workspace_dir / "alpha")
        tokens = corpus_tokens(corpus, {"united states"})
        assert tokens[:3] == ["the", "united states", "stands"]

    def test_missing_directory(self, tmp_path):
        with pytest.raises(CorpusNotFoundError):
            load_corpus(tmp_path / "nope")

    def test_missing_document_file(self, tmp_path):
        (tmp_path / "corpus.json").write_text(
            json.dumps(
                {
                    "id": "x",
                    "label": "X",
                    "order_key": 1,
                    "documents": [{"id": "d", "file": "gone.txt"}],
                }
            )
        )
        with pytest.raises(CorpusNotFoundError) as err:
            load_corpus(tmp_path)
        assert "gone.txt" in str(err.value)

    def test_duplicate_document_id(self, tmp_path):
        (tmp_path / "a.txt").write_text("hello")
        (tmp_path / "corpus.json").write_text(
            json.dumps(
                {
                    "id": "x",
                    "label": "X",
                    "order_key": 1,
                    "documents": [
                        {"id": "dup", "file": "a.txt"},
                        {"id": "dup", "file": "a.txt"},
                    ],
                }
            )
        )
        with pytest.raises(DuplicateDocumentError) as err:
            load_corpus(tmp_path)
        assert "dup" in str(err.value)

    @pytest.mark.parametrize(
        "manifest",
        [
            "not json at all {",
            json.dumps(["wrong", "shape"]),
            json.dumps({"label": "X", "order_key": 1, "documents": []}),
            json.dumps({"id": "x", "label": "X", "order_key": "1", "documents": []}),
            json.dumps({"id": "x", "label": "X", "order_key": True, "documents": []}),
            json.dumps({"id": "x", "label": "X", "order_key": 1, "documents": [{"id": "d"}]}),
        ],
    )
    def test_malformed_manifest(self, tmp_path, manifest):
        (tmp_path / "corpus.json").write_text(manifest)
        with pytest.raises(ManifestError):
            load_corpus(tmp_path)

    def test_empty_document_yields_empty_token_stream(self, tmp_path):
        (tmp_path / "empty.txt").write_text("")
        (tmp_path / "corpus.json").write_text(
            json.dumps(
                {
                    "id": "x",
                    "label": "X",
                    "order_key": 1,
                    "documents": [{"id": "d", "file": "empty.txt"}],
                }
            )
        )
        corpus = load_corpus(tmp_path)
        assert corpus_tokens(corpus) == []


def test_load_stopwords(stopwords_path):
    stopwords = load_stopwords(stopwords_path)
    assert "the" in stopwords
    assert "great" not in stopwords


def test_load_stopwords_missing_file(tmp_path):
    with pytest.raises(CorpusNotFoundError):
        load_stopwords(tmp_path / "absent.txt")
