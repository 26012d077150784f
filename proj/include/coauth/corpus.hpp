#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace coauth {

/// One publication with its deduplicated author list.
struct PaperRecord {
    std::string paper_id;
    std::vector<std::string> author_ids; // deduplicated, stored sorted
    std::optional<int> year;
    std::optional<std::string> title;

    std::size_t n_authors() const { return author_ids.size(); }

    bool operator==(const PaperRecord&) const = default;
};

/// Immutable collection of papers plus the inverse author -> papers index.
/// Papers are kept sorted by paper_id and author lists sorted by author_id,
/// so a corpus built from the same records is identical regardless of the
/// order rows arrived in.
class Corpus {
public:
    Corpus() = default;

    /// Validates (non-empty deduplicated author lists, unique paper ids),
    /// canonicalizes, and indexes the given records.
    /// Throws std::invalid_argument on violations.
    static Corpus from_records(std::vector<PaperRecord> records);

    const std::vector<PaperRecord>& papers() const { return papers_; }
    std::size_t n_papers() const { return papers_.size(); }
    std::size_t n_authors() const { return author_index_.size(); }

    /// author_id -> indices into papers(), ascending.
    const std::unordered_map<std::string, std::vector<std::size_t>>& author_index() const {
        return author_index_;
    }

    bool operator==(const Corpus& other) const { return papers_ == other.papers_; }

private:
    std::vector<PaperRecord> papers_;
    std::unordered_map<std::string, std::vector<std::size_t>> author_index_;
};

enum class CorpusFormat {
    LongCsv,   // header "paper_id,author_id", one row per authorship
    JsonLines, // one {"paper_id", "authors", ["year"], ["title"]} object per line
};

/// Parses a corpus from the given stream.
///
/// Malformed rows (bad column count, invalid JSON, duplicate paper objects,
/// empty identifiers) throw ParseError with the line number. Records whose
/// author list is empty after deduplication are dropped, with a note
/// appended to *diagnostics when provided.
Corpus parse_corpus(std::istream& in, CorpusFormat format,
                    std::vector<std::string>* diagnostics = nullptr);

Corpus parse_corpus_file(const std::string& path, CorpusFormat format,
                         std::vector<std::string>* diagnostics = nullptr);

/// Writes one JSON object per line; parse_corpus(JsonLines) reads it back
/// into an identical corpus.
void write_jsonl(const Corpus& corpus, std::ostream& out);

/// Paper nodes on one side, author nodes on the other, one edge per
/// authorship. Node id vectors are sorted; edges are stored per paper as
/// indices into author_ids().
class BipartiteGraph {
public:
    static BipartiteGraph from_corpus(const Corpus& corpus);

    const std::vector<std::string>& paper_ids() const { return paper_ids_; }
    const std::vector<std::string>& author_ids() const { return author_ids_; }

    /// Author indices of one paper, ascending. Its size is that paper's N_p.
    const std::vector<std::uint32_t>& paper_authors(std::size_t paper) const {
        return paper_authors_[paper];
    }

    std::size_t n_papers() const { return paper_ids_.size(); }
    std::size_t n_authors() const { return author_ids_.size(); }
    std::size_t n_edges() const { return n_edges_; }

private:
    std::vector<std::string> paper_ids_;
    std::vector<std::string> author_ids_;
    std::vector<std::vector<std::uint32_t>> paper_authors_;
    std::size_t n_edges_ = 0;
};

/// Histogram of authors-per-paper with its summary statistics. mean/sd/
/// skewness are population moments of the histogram; skewness is defined as
/// 0 when the distribution has no spread.
struct AuthorCountDistribution {
    std::map<std::uint32_t, std::size_t> histogram; // authors-per-paper -> papers
    std::size_t n = 0;
    double mean = 0.0;
    double median = 0.0;
    double sd = 0.0;
    double skewness = 0.0;

    std::uint32_t min_count() const { return histogram.empty() ? 0 : histogram.begin()->first; }
    std::uint32_t max_count() const { return histogram.empty() ? 0 : histogram.rbegin()->first; }
};

/// Recomputes the summary statistics of a histogram (used both by
/// author_count_distribution and by tests that build histograms directly).
AuthorCountDistribution distribution_from_histogram(std::map<std::uint32_t, std::size_t> histogram);

/// Distribution of N_p over a non-empty corpus.
/// Throws std::invalid_argument if the corpus is empty.
AuthorCountDistribution author_count_distribution(const Corpus& corpus);

BipartiteGraph build_bipartite(const Corpus& corpus);

struct FilterResult {
    Corpus retained;                  // papers with N_p <= cutoff
    std::vector<PaperRecord> removed; // the rest, sorted by paper_id
};

/// Splits a corpus at the hyperauthorship cutoff: a paper is removed iff it
/// has more than `cutoff` authors. Authors appearing only in removed papers
/// vanish from the retained corpus's author universe.
/// Throws std::invalid_argument if cutoff < 1.
FilterResult filter_hyperauthored(const Corpus& corpus, std::uint32_t cutoff);

} // namespace coauth
