#pragma once

#include <cstdint>

#include "coauth/corpus.hpp"

namespace coauth {

/// Deterministic synthetic-corpus generator for desk-scale experiments.
/// Baseline papers draw their author count from a discretized lognormal
/// (rounded, clipped to >= 1); a hyper_rate fraction instead draws uniformly
/// from [hyper_min, hyper_max]. Authors are drawn with preferential
/// repetition -- mostly from the pool of authors already seen -- so the
/// co-author degree distribution comes out heavy-tailed.
struct SynthParams {
    std::size_t n_papers = 1000;
    std::size_t n_authors = 2000;
    double mu = 1.35;    // lognormal location of authors-per-paper
    double sigma = 0.75; // lognormal scale
    double hyper_rate = 0.0;
    std::uint32_t hyper_min = 30;
    std::uint32_t hyper_max = 160;
    double repeat_bias = 0.6; // probability of re-drawing a previously seen author
    std::uint64_t seed = 0;
};

/// Throws std::invalid_argument when the parameters cannot yield a corpus
/// (no papers/authors, hyper_max > n_authors with a positive rate, bad
/// ranges).
Corpus synth_corpus(const SynthParams& params);

} // namespace coauth
