#include "coauth/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "coauth/errors.hpp"

#include <json.hpp>

namespace coauth {

Corpus Corpus::from_records(std::vector<PaperRecord> records) {
    for (auto& rec : records) {
        if (rec.paper_id.empty()) throw std::invalid_argument("paper with empty paper_id");
        std::sort(rec.author_ids.begin(), rec.author_ids.end());
        rec.author_ids.erase(std::unique(rec.author_ids.begin(), rec.author_ids.end()),
                             rec.author_ids.end());
        if (rec.author_ids.empty())
            throw std::invalid_argument("paper " + rec.paper_id + " has no authors");
        for (const auto& a : rec.author_ids)
            if (a.empty())
                throw std::invalid_argument("paper " + rec.paper_id + " has an empty author id");
    }
    std::sort(records.begin(), records.end(),
              [](const PaperRecord& a, const PaperRecord& b) { return a.paper_id < b.paper_id; });
    for (std::size_t i = 1; i < records.size(); ++i)
        if (records[i].paper_id == records[i - 1].paper_id)
            throw std::invalid_argument("duplicate paper_id " + records[i].paper_id);

    Corpus c;
    c.papers_ = std::move(records);
    for (std::size_t i = 0; i < c.papers_.size(); ++i)
        for (const auto& a : c.papers_[i].author_ids) c.author_index_[a].push_back(i);
    return c;
}

namespace {

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

Corpus parse_long_csv(std::istream& in, std::vector<std::string>* diagnostics) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) throw ParseError(1, "missing header");
    ++lineno;
    if (strip_cr(line) != "paper_id,author_id")
        throw ParseError(lineno, "expected header 'paper_id,author_id'");

    // Accumulate author lists per paper in first-seen order; duplicates of
    // the same (paper, author) row collapse to one authorship.
    std::unordered_map<std::string, std::set<std::string>> authors_of;
    std::vector<std::string> paper_order;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw ParseError(lineno, "expected 2 fields, got 1");
        if (line.find(',', comma + 1) != std::string::npos)
            throw ParseError(lineno, "expected 2 fields, got more");
        std::string paper = line.substr(0, comma);
        std::string author = line.substr(comma + 1);
        if (paper.empty()) throw ParseError(lineno, "empty paper_id");
        if (author.empty()) throw ParseError(lineno, "empty author_id");
        auto [it, inserted] = authors_of.try_emplace(std::move(paper));
        if (inserted) paper_order.push_back(it->first);
        it->second.insert(std::move(author));
    }
    (void)diagnostics; // long-csv rows always carry exactly one author
    std::vector<PaperRecord> records;
    records.reserve(paper_order.size());
    for (const auto& pid : paper_order) {
        PaperRecord rec;
        rec.paper_id = pid;
        const auto& authors = authors_of.at(pid);
        rec.author_ids.assign(authors.begin(), authors.end());
        records.push_back(std::move(rec));
    }
    return Corpus::from_records(std::move(records));
}

Corpus parse_jsonl(std::istream& in, std::vector<std::string>* diagnostics) {
    std::vector<PaperRecord> records;
    std::set<std::string> seen_ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_cr(line);
        if (line.empty()) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(lineno, std::string("invalid JSON: ") + e.what());
        }
        if (!obj.is_object()) throw ParseError(lineno, "expected a JSON object");
        if (!obj.contains("paper_id") || !obj["paper_id"].is_string())
            throw ParseError(lineno, "missing string field 'paper_id'");
        if (!obj.contains("authors") || !obj["authors"].is_array())
            throw ParseError(lineno, "missing array field 'authors'");

        PaperRecord rec;
        rec.paper_id = obj["paper_id"].get<std::string>();
        if (rec.paper_id.empty()) throw ParseError(lineno, "empty paper_id");
        if (!seen_ids.insert(rec.paper_id).second)
            throw ParseError(lineno, "duplicate paper_id " + rec.paper_id);
        for (const auto& a : obj["authors"]) {
            if (!a.is_string() || a.get<std::string>().empty())
                throw ParseError(lineno, "authors must be non-empty strings");
            rec.author_ids.push_back(a.get<std::string>());
        }
        if (obj.contains("year")) {
            if (!obj["year"].is_number_integer()) throw ParseError(lineno, "'year' must be an integer");
            rec.year = obj["year"].get<int>();
        }
        if (obj.contains("title")) {
            if (!obj["title"].is_string()) throw ParseError(lineno, "'title' must be a string");
            rec.title = obj["title"].get<std::string>();
        }
        std::sort(rec.author_ids.begin(), rec.author_ids.end());
        rec.author_ids.erase(std::unique(rec.author_ids.begin(), rec.author_ids.end()),
                             rec.author_ids.end());
        if (rec.author_ids.empty()) {
            if (diagnostics)
                diagnostics->push_back("line " + std::to_string(lineno) + ": paper " +
                                       rec.paper_id + " rejected (no authors after dedup)");
            continue;
        }
        records.push_back(std::move(rec));
    }
    return Corpus::from_records(std::move(records));
}

} // namespace

Corpus parse_corpus(std::istream& in, CorpusFormat format, std::vector<std::string>* diagnostics) {
    switch (format) {
        case CorpusFormat::LongCsv: return parse_long_csv(in, diagnostics);
        case CorpusFormat::JsonLines: return parse_jsonl(in, diagnostics);
    }
    throw std::invalid_argument("unknown corpus format");
}

Corpus parse_corpus_file(const std::string& path, CorpusFormat format,
                         std::vector<std::string>* diagnostics) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_corpus(in, format, diagnostics);
}

void write_jsonl(const Corpus& corpus, std::ostream& out) {
    for (const auto& rec : corpus.papers()) {
        nlohmann::json obj;
        obj["paper_id"] = rec.paper_id;
        obj["authors"] = rec.author_ids;
        if (rec.year) obj["year"] = *rec.year;
        if (rec.title) obj["title"] = *rec.title;
        out << obj.dump() << '\n';
    }
}

BipartiteGraph BipartiteGraph::from_corpus(const Corpus& corpus) {
    BipartiteGraph b;
    b.paper_ids_.reserve(corpus.n_papers());
    for (const auto& rec : corpus.papers()) b.paper_ids_.push_back(rec.paper_id);

    b.author_ids_.reserve(corpus.n_authors());
    for (const auto& [author, _] : corpus.author_index()) b.author_ids_.push_back(author);
    std::sort(b.author_ids_.begin(), b.author_ids_.end());

    std::unordered_map<std::string, std::uint32_t> author_pos;
    author_pos.reserve(b.author_ids_.size());
    for (std::uint32_t i = 0; i < b.author_ids_.size(); ++i) author_pos[b.author_ids_[i]] = i;

    b.paper_authors_.resize(corpus.n_papers());
    for (std::size_t p = 0; p < corpus.n_papers(); ++p) {
        const auto& rec = corpus.papers()[p];
        auto& slots = b.paper_authors_[p];
        slots.reserve(rec.author_ids.size());
        for (const auto& a : rec.author_ids) slots.push_back(author_pos.at(a));
        std::sort(slots.begin(), slots.end());
        b.n_edges_ += slots.size();
    }
    return b;
}

BipartiteGraph build_bipartite(const Corpus& corpus) { return BipartiteGraph::from_corpus(corpus); }

AuthorCountDistribution distribution_from_histogram(std::map<std::uint32_t, std::size_t> histogram) {
    AuthorCountDistribution d;
    d.histogram = std::move(histogram);
    for (const auto& [value, count] : d.histogram) {
        (void)value;
        d.n += count;
    }
    if (d.n == 0) return d;

    double sum = 0.0;
    for (const auto& [value, count] : d.histogram) sum += double(value) * double(count);
    d.mean = sum / double(d.n);

    // Median over the expanded sample: average of the two middle order
    // statistics for even n.
    auto value_at = [&](std::size_t rank) { // 1-based
        std::size_t seen = 0;
        for (const auto& [value, count] : d.histogram) {
            seen += count;
            if (seen >= rank) return double(value);
        }
        return double(d.histogram.rbegin()->first);
    };
    if (d.n % 2 == 1) {
        d.median = value_at(d.n / 2 + 1);
    } else {
        d.median = 0.5 * (value_at(d.n / 2) + value_at(d.n / 2 + 1));
    }

    double m2 = 0.0, m3 = 0.0;
    for (const auto& [value, count] : d.histogram) {
        double dev = double(value) - d.mean;
        m2 += dev * dev * double(count);
        m3 += dev * dev * dev * double(count);
    }
    m2 /= double(d.n);
    m3 /= double(d.n);
    d.sd = std::sqrt(m2);
    d.skewness = (d.n < 2 || m2 <= 0.0) ? 0.0 : m3 / std::pow(m2, 1.5);
    return d;
}

AuthorCountDistribution author_count_distribution(const Corpus& corpus) {
    if (corpus.n_papers() == 0)
        throw std::invalid_argument("author_count_distribution: empty corpus");
    std::map<std::uint32_t, std::size_t> histogram;
    for (const auto& rec : corpus.papers())
        ++histogram[static_cast<std::uint32_t>(rec.n_authors())];
    return distribution_from_histogram(std::move(histogram));
}

FilterResult filter_hyperauthored(const Corpus& corpus, std::uint32_t cutoff) {
    if (cutoff < 1) throw std::invalid_argument("filter_hyperauthored: cutoff must be >= 1");
    std::vector<PaperRecord> kept, removed;
    for (const auto& rec : corpus.papers()) {
        if (rec.n_authors() <= cutoff)
            kept.push_back(rec);
        else
            removed.push_back(rec);
    }
    FilterResult result;
    result.retained = Corpus::from_records(std::move(kept));
    result.removed = std::move(removed);
    return result;
}

} // namespace coauth
