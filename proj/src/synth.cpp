#include "coauth/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_set>

#include "coauth/rng.hpp"

namespace coauth {

namespace {

double uniform01(std::mt19937_64& rng) {
    return double(rng() >> 11) * 0x1p-53; // [0, 1)
}

/// Box-Muller, spelled out so the byte stream never depends on a standard
/// library's distribution internals.
double standard_normal(std::mt19937_64& rng) {
    const double u1 = 1.0 - uniform01(rng); // (0, 1]
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * 3.141592653589793238463 * u2);
}

int digits(std::size_t n) {
    int d = 1;
    while (n >= 10) {
        n /= 10;
        ++d;
    }
    return d > 20 ? 20 : d;
}

std::string padded_id(char prefix, std::size_t index, int width) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%c%0*llu", prefix, width,
                  static_cast<unsigned long long>(index));
    return buf;
}

} // namespace

Corpus synth_corpus(const SynthParams& p) {
    if (p.n_papers == 0 || p.n_authors == 0)
        throw std::invalid_argument("synth_corpus: need papers and authors");
    if (!(p.hyper_rate >= 0.0 && p.hyper_rate <= 1.0))
        throw std::invalid_argument("synth_corpus: hyper_rate must be in [0, 1]");
    if (p.hyper_min < 1 || p.hyper_min > p.hyper_max)
        throw std::invalid_argument("synth_corpus: bad hyper size range");
    if (p.hyper_rate > 0.0 && p.hyper_max > p.n_authors)
        throw std::invalid_argument("synth_corpus: hyper papers would need more authors than exist");
    if (!(p.repeat_bias >= 0.0 && p.repeat_bias < 1.0))
        throw std::invalid_argument("synth_corpus: repeat_bias must be in [0, 1)");
    if (!(p.sigma > 0.0)) throw std::invalid_argument("synth_corpus: sigma must be positive");

    std::mt19937_64 rng(p.seed);
    const int paper_width = digits(p.n_papers);
    const int author_width = digits(p.n_authors);

    std::vector<std::uint32_t> urn; // one entry per past selection
    urn.reserve(p.n_papers * 8);
    std::vector<PaperRecord> records;
    records.reserve(p.n_papers);
    std::unordered_set<std::uint32_t> in_paper;

    for (std::size_t i = 0; i < p.n_papers; ++i) {
        std::size_t n_p;
        if (p.hyper_rate > 0.0 && uniform01(rng) < p.hyper_rate) {
            n_p = p.hyper_min + uniform_index(rng, p.hyper_max - p.hyper_min + 1);
        } else {
            const double raw = std::exp(p.mu + p.sigma * standard_normal(rng));
            n_p = static_cast<std::size_t>(std::llround(raw));
            if (n_p < 1) n_p = 1;
            if (n_p > p.n_authors) n_p = p.n_authors;
        }

        in_paper.clear();
        PaperRecord rec;
        rec.paper_id = padded_id('p', i + 1, paper_width);
        rec.author_ids.reserve(n_p);
        while (in_paper.size() < n_p) {
            std::uint32_t author;
            bool found = false;
            for (int attempt = 0; attempt < 200; ++attempt) {
                if (!urn.empty() && uniform01(rng) < p.repeat_bias)
                    author = urn[uniform_index(rng, urn.size())];
                else
                    author = static_cast<std::uint32_t>(uniform_index(rng, p.n_authors));
                if (!in_paper.count(author)) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                // Dense corner: walk to the next unused author id.
                author = 0;
                while (in_paper.count(author)) ++author;
            }
            in_paper.insert(author);
            urn.push_back(author);
            rec.author_ids.push_back(padded_id('a', author + 1, author_width));
        }
        records.push_back(std::move(rec));
    }
    return Corpus::from_records(std::move(records));
}

} // namespace coauth
