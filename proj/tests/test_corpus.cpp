#include <doctest.h>

#include <random>
#include <sstream>

#include "coauth/corpus.hpp"
#include "coauth/errors.hpp"
#include "helpers.hpp"

using namespace coauth;

TEST_SUITE_BEGIN("corpus");

TEST_CASE("long-csv parsing builds papers and dedupes authors") {
    std::istringstream in("paper_id,author_id\np1,a\np1,b\np2,a\n");
    auto c = parse_corpus(in, CorpusFormat::LongCsv);
    CHECK(c.n_papers() == 2);
    CHECK(c.n_authors() == 2);

    std::istringstream dup("paper_id,author_id\np1,a\np1,a\n");
    auto d = parse_corpus(dup, CorpusFormat::LongCsv);
    REQUIRE(d.n_papers() == 1);
    CHECK(d.papers()[0].author_ids == std::vector<std::string>{"a"});
}

TEST_CASE("long-csv malformed rows carry line numbers") {
    std::istringstream bad_header("wrong\np1,a\n");
    CHECK_THROWS_AS(parse_corpus(bad_header, CorpusFormat::LongCsv), ParseError);

    std::istringstream bad_row("paper_id,author_id\np1,a\njust_one_field\n");
    try {
        parse_corpus(bad_row, CorpusFormat::LongCsv);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }

    std::istringstream empty_field("paper_id,author_id\np1,\n");
    CHECK_THROWS_AS(parse_corpus(empty_field, CorpusFormat::LongCsv), ParseError);
}

TEST_CASE("json-lines parsing: metadata, rejects, duplicates") {
    std::istringstream in(
        R"({"paper_id":"p1","authors":["b","a","b"],"year":2019,"title":"T"})"
        "\n"
        R"({"paper_id":"p2","authors":[]})"
        "\n"
        R"({"paper_id":"p3","authors":["c"]})"
        "\n");
    std::vector<std::string> diagnostics;
    auto c = parse_corpus(in, CorpusFormat::JsonLines, &diagnostics);
    CHECK(c.n_papers() == 2); // p2 rejected
    REQUIRE(diagnostics.size() == 1);
    CHECK(diagnostics[0].find("p2") != std::string::npos);
    CHECK(c.papers()[0].author_ids == std::vector<std::string>{"a", "b"});
    CHECK(c.papers()[0].year == 2019);
    CHECK(c.papers()[0].title == "T");

    std::istringstream dup(R"({"paper_id":"p1","authors":["a"]})"
                           "\n"
                           R"({"paper_id":"p1","authors":["b"]})"
                           "\n");
    CHECK_THROWS_AS(parse_corpus(dup, CorpusFormat::JsonLines), ParseError);

    std::istringstream garbage("{not json\n");
    CHECK_THROWS_AS(parse_corpus(garbage, CorpusFormat::JsonLines), ParseError);
}

TEST_CASE("jsonl round trip reproduces the corpus exactly") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto c = testutil::random_corpus(rng);
        std::ostringstream out;
        write_jsonl(c, out);
        std::istringstream in(out.str());
        auto back = parse_corpus(in, CorpusFormat::JsonLines);
        CHECK(back == c);
    }
}

TEST_CASE("parse result does not depend on row order") {
    std::istringstream fwd("paper_id,author_id\np1,a\np1,b\np2,a\np2,c\n");
    std::istringstream rev("paper_id,author_id\np2,c\np2,a\np1,b\np1,a\n");
    CHECK(parse_corpus(fwd, CorpusFormat::LongCsv) == parse_corpus(rev, CorpusFormat::LongCsv));
}

TEST_CASE("author index inverts the paper-author relation") {
    std::mt19937_64 rng(11);
    auto c = testutil::random_corpus(rng);
    std::size_t index_pairs = 0;
    for (const auto& [author, papers] : c.author_index()) {
        index_pairs += papers.size();
        for (auto p : papers) {
            const auto& ids = c.papers()[p].author_ids;
            CHECK(std::find(ids.begin(), ids.end(), author) != ids.end());
        }
    }
    std::size_t direct_pairs = 0;
    for (const auto& rec : c.papers()) direct_pairs += rec.author_ids.size();
    CHECK(index_pairs == direct_pairs);
}

TEST_CASE("distribution summary statistics") {
    auto c = testutil::corpus_from({{"a", "b"}, {"c", "d"}, {"e", "f", "g", "h"}});
    auto d = author_count_distribution(c);
    CHECK(d.n == 3);
    CHECK(d.mean == doctest::Approx(8.0 / 3.0));
    CHECK(d.median == doctest::Approx(2.0));
    CHECK(d.histogram.at(2) == 2);
    CHECK(d.histogram.at(4) == 1);

    auto single = testutil::corpus_from({{"a", "b", "c", "d", "e"}});
    auto ds = author_count_distribution(single);
    CHECK(ds.sd == 0.0);
    CHECK(ds.skewness == 0.0);

    CHECK_THROWS_AS(author_count_distribution(Corpus{}), std::invalid_argument);
}

TEST_CASE("skewness matches a direct computation") {
    auto d = distribution_from_histogram({{1, 100}, {156, 1}});
    const double n = 101.0;
    const double mean = (100.0 * 1 + 156.0) / n;
    double m2 = 0, m3 = 0;
    for (auto [value, count] : std::map<std::uint32_t, std::size_t>{{1, 100}, {156, 1}}) {
        m2 += count * std::pow(value - mean, 2);
        m3 += count * std::pow(value - mean, 3);
    }
    m2 /= n;
    m3 /= n;
    CHECK(d.skewness == doctest::Approx(m3 / std::pow(m2, 1.5)).epsilon(1e-12));
    CHECK(d.skewness > 0.5);
}

TEST_CASE("bipartite construction") {
    auto star = testutil::corpus_from({{"a", "b", "c"}});
    auto b = build_bipartite(star);
    CHECK(b.n_papers() + b.n_authors() == 4);
    CHECK(b.n_edges() == 3);

    auto shared = testutil::corpus_from({{"a", "b"}, {"a", "c", "d"}});
    auto b2 = build_bipartite(shared);
    CHECK(b2.n_papers() + b2.n_authors() == 6);
    CHECK(b2.n_edges() == 5);
}

TEST_CASE("bipartite paper degrees reproduce the distribution histogram") {
    std::mt19937_64 rng(13);
    auto c = testutil::random_corpus(rng);
    auto b = build_bipartite(c);
    auto d = author_count_distribution(c);
    std::map<std::uint32_t, std::size_t> degree_hist;
    std::size_t edge_sum = 0;
    for (std::size_t p = 0; p < b.n_papers(); ++p) {
        ++degree_hist[std::uint32_t(b.paper_authors(p).size())];
        edge_sum += b.paper_authors(p).size();
    }
    CHECK(degree_hist == d.histogram);
    CHECK(edge_sum == b.n_edges());
}

TEST_CASE("hyperauthorship filter") {
    auto c = testutil::corpus_from({{"a", "b", "c"}, {"a", "b", "c", "d", "e", "f"}});
    auto r = filter_hyperauthored(c, 5);
    CHECK(r.retained.n_papers() == 1);
    CHECK(r.removed.size() == 1);
    CHECK(r.removed[0].n_authors() == 6);
    // authors only on removed papers vanish
    CHECK(r.retained.n_authors() == 3);

    auto noop = filter_hyperauthored(c, 6);
    CHECK(noop.removed.empty());
    CHECK(noop.retained == c);

    CHECK_THROWS_AS(filter_hyperauthored(c, 0), std::invalid_argument);
}

TEST_CASE("filter is a partition and monotone in the cutoff") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        auto c = testutil::random_corpus(rng);
        for (std::uint32_t k = 1; k < 10; ++k) {
            auto r = filter_hyperauthored(c, k);
            CHECK(r.retained.n_papers() + r.removed.size() == c.n_papers());
            auto r2 = filter_hyperauthored(c, k + 1);
            // retained(k) is a subset of retained(k+1)
            for (const auto& rec : r.retained.papers()) {
                auto& p2 = r2.retained.papers();
                CHECK(std::find(p2.begin(), p2.end(), rec) != p2.end());
            }
        }
    }
}

TEST_SUITE_END();
