import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from comptext.errors import (
    DuplicateCorpusError,
    DuplicateOrderKeyError,
    EmptyWorkspaceError,
)
from comptext.ingest import build_distribution
from comptext.overview import (
    AnnotatedCorpus,
    NodeRanking,
    build_timeline,
    build_wordcloud,
)
from comptext.sentiment import Polarity, SentimentLexicon, annotate

LEXICON = SentimentLexicon(
    {
        "great": 0.75,
        "jobs": 0.25,
        "health": 0.5,
        "hope": 0.5,
        "crisis": -0.75,
        "fear": -0.5,
    }
)


def corpus(corpus_id, tokens, order_key=0, label=None):
    ann = annotate(build_distribution(tokens), LEXICON)
    return AnnotatedCorpus(
        corpus_id=corpus_id,
        label=label or corpus_id.title(),
        order_key=order_key,
        annotated=ann,
    )


class TestWordCloud:
    def test_single_corpus_has_no_edges(self):
        graph = build_wordcloud([corpus("solo", ["great", "great", "fear"])])
        assert len(graph.nodes) == 1
        assert graph.edges == ()

    def test_disjoint_top_words_have_no_edge(self):
        graph = build_wordcloud(
            [corpus("a", ["great", "jobs"]), corpus("b", ["crisis", "fear"])]
        )
        assert graph.edges == ()

    def test_shared_top_word_creates_edge(self):
        graph = build_wordcloud(
            [corpus("a", ["great", "jobs"]), corpus("b", ["great", "health"])], m=2
        )
        assert len(graph.edges) == 1
        edge = graph.edges[0]
        assert (edge.corpus_a, edge.corpus_b) == ("a", "b")
        assert edge.shared_terms == ("great",)

    def test_edges_are_exactly_pairwise_intersections(self):
        corpora = [
            corpus("a", ["great", "jobs", "hope"]),
            corpus("b", ["great", "health", "hope"]),
            corpus("c", ["crisis"]),
        ]
        graph = build_wordcloud(corpora, m=3)
        tops = {n.corpus_id: {w.term for w in n.top_words} for n in graph.nodes}
        expected = {}
        for x, y in itertools.combinations(sorted(tops), 2):
            shared = tops[x] & tops[y]
            if shared:
                expected[(x, y)] = tuple(sorted(shared))
        actual = {(e.corpus_a, e.corpus_b): e.shared_terms for e in graph.edges}
        assert actual == expected
        assert ("a", "c") not in actual  # c stays isolated
        assert ("b", "c") not in actual

    def test_top_words_ranked_by_count_then_term(self):
        graph = build_wordcloud(
            [corpus("a", ["fear", "fear", "great", "great", "hope"])], m=3
        )
        assert [w.term for w in graph.nodes[0].top_words] == ["fear", "great", "hope"]

    def test_aggregate_ranking_uses_score_magnitude(self):
        # jobs: 3 * 0.25 = 0.75 < crisis: 2 * -0.75 = -1.5 in magnitude
        graph = build_wordcloud(
            [corpus("a", ["jobs", "jobs", "jobs", "crisis", "crisis"])],
            m=1,
            ranking=NodeRanking.AGGREGATE,
        )
        assert [w.term for w in graph.nodes[0].top_words] == ["crisis"]
        by_count = build_wordcloud(
            [corpus("a", ["jobs", "jobs", "jobs", "crisis", "crisis"])], m=1
        )
        assert [w.term for w in by_count.nodes[0].top_words] == ["jobs"]

    def test_top_words_carry_polarity_and_aggregate(self):
        graph = build_wordcloud([corpus("a", ["crisis", "crisis", "great"])])
        words = {w.term: w for w in graph.nodes[0].top_words}
        assert words["crisis"].polarity is Polarity.NEGATIVE
        assert words["crisis"].count == 2
        assert words["crisis"].aggregate_score == pytest.approx(-1.5)
        assert words["great"].polarity is Polarity.POSITIVE

    def test_empty_corpus_list_rejected(self):
        with pytest.raises(EmptyWorkspaceError):
            build_wordcloud([])

    def test_invalid_m_rejected(self):
        with pytest.raises(ValueError):
            build_wordcloud([corpus("a", ["great"])], m=0)

    def test_duplicate_ids_rejected(self):
        with pytest.raises(DuplicateCorpusError):
            build_wordcloud([corpus("a", ["great"]), corpus("a", ["fear"])])

    @given(st.permutations(["a", "b", "c"]), st.integers(1, 5))
    def test_edge_set_independent_of_input_order(self, order, m):
        pool = {
            "a": corpus("a", ["great", "jobs", "hope", "fear"]),
            "b": corpus("b", ["great", "health", "hope"]),
            "c": corpus("c", ["crisis", "fear"]),
        }
        baseline = build_wordcloud([pool["a"], pool["b"], pool["c"]], m=m)
        permuted = build_wordcloud([pool[k] for k in order], m=m)
        assert permuted.edges == baseline.edges
        assert permuted.nodes == baseline.nodes

    @given(st.integers(1, 6))
    def test_growing_m_never_drops_words(self, m):
        corpora = [
            corpus("a", ["great", "jobs", "hope", "fear", "crisis"]),
            corpus("b", ["health", "great"]),
        ]
        small = build_wordcloud(corpora, m=m)
        big = build_wordcloud(corpora, m=m + 1)
        for s_node, b_node in zip(small.nodes, big.nodes):
            s_terms = {w.term for w in s_node.top_words}
            b_terms = {w.term for w in b_node.top_words}
            assert s_terms <= b_terms

    def test_top_words_size_is_min_of_m_and_vocabulary(self):
        c = corpus("a", ["great", "jobs", "hope"])
        assert len(build_wordcloud([c], m=2).nodes[0].top_words) == 2
        assert len(build_wordcloud([c], m=9).nodes[0].top_words) == 3


class TestTimeline:
    def test_single_positive_corpus(self):
        points = build_timeline([corpus("a", ["great", "hope"], order_key=5)])
        assert len(points) == 1
        assert points[0].polarity is Polarity.POSITIVE
        assert points[0].order_key == 5

    def test_balanced_corpus_is_neutral(self):
        points = build_timeline([corpus("a", ["hope", "fear"], order_key=1)])
        assert points[0].sentiment == 0.0
        assert points[0].polarity is Polarity.NEUTRAL

    def test_points_sorted_by_order_key(self):
        points = build_timeline(
            [
                corpus("third", ["great"], order_key=3),
                corpus("first", ["fear"], order_key=1),
                corpus("second", ["hope"], order_key=2),
            ]
        )
        assert [p.corpus_id for p in points] == ["first", "second", "third"]

    def test_duplicate_order_key_names_both_corpora(self):
        with pytest.raises(DuplicateOrderKeyError) as err:
            build_timeline(
                [corpus("x", ["great"], order_key=1), corpus("y", ["fear"], order_key=1)]
            )
        assert "x" in str(err.value) and "y" in str(err.value)

    @given(st.permutations([1, 2, 3, 4]))
    def test_sentiments_stable_under_permutation(self, keys):
        tokens = {1: ["great"], 2: ["fear"], 3: ["hope", "fear"], 4: ["crisis"]}
        corpora = [corpus(f"c{k}", tokens[k], order_key=k) for k in keys]
        points = build_timeline(corpora)
        assert [p.order_key for p in points] == [1, 2, 3, 4]
        assert len(points) == len(corpora)
