#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coauth/graph.hpp"
#include "coauth/metrics.hpp"

namespace coauth {

struct RewireResult {
    CoauthorGraph graph;
    bool degenerate = false;   // too few swappable edges; graph returned unchanged
    std::size_t accepted = 0;  // successful swaps
};

/// Degree-preserving randomization: niter * m attempted double-edge swaps,
/// rejecting self-loops, parallel edges, and any swap that would disconnect
/// the graph. The result keeps the node set and degree sequence and is
/// returned unweighted (references are only ever used topologically).
/// Throws MetricError on disconnected input.
RewireResult random_reference(const CoauthorGraph& g, int niter, std::uint64_t seed);

/// Degree-preserving latticization: like random_reference, but a swap is
/// additionally accepted only when it does not increase the total ring
/// distance of the two edges under the fixed circular ordering of node
/// indices -- edges migrate toward a banded ring-lattice adjacency.
RewireResult lattice_reference(const CoauthorGraph& g, int niter, std::uint64_t seed);

struct OmegaParams {
    int niter = 5;
    int nrand = 5;
    std::uint64_t seed = 0;
    PathSampleParams path; // path-length sampling for large graphs
};

struct OmegaResult {
    double omega = 0.0;
    double clustering = 0.0;           // C of the input
    double path_length = 0.0;          // L of the input
    std::vector<double> random_path_lengths; // Lr per replicate
    std::vector<double> lattice_clusterings; // Cl per replicate
};

/// Small-world coefficient Lr/L - C/Cl on a connected graph: Lr averages the
/// path length of nrand random references, Cl the clustering of nrand
/// lattice references (replicate seeds are seed+i and seed+nrand+i).
/// Near zero means small-world; positive leans random, negative leans
/// lattice. Throws MetricError on disconnected input or when Cl comes out 0.
OmegaResult compute_omega(const CoauthorGraph& g, const OmegaParams& params);

double omega(const CoauthorGraph& g, int niter, int nrand, std::uint64_t seed);

struct PowerlawFit {
    double alpha = 0.0;
    std::uint32_t xmin = 0;
    double ks = 0.0; // Kolmogorov-Smirnov distance of the fitted tail
};

/// Discrete maximum-likelihood power-law fit. For each candidate xmin among
/// the observed values (capped at the 90th percentile so a usable tail
/// remains), alpha maximizes the discrete likelihood via the Hurwitz zeta
/// normalizer; the xmin minimizing the KS distance between the empirical and
/// fitted tail wins. Requires at least 10 observations, all >= 1, not all
/// identical.
PowerlawFit powerlaw_alpha(const std::vector<std::uint32_t>& degrees);

/// MLE exponent for a fixed xmin over the observations >= xmin.
double powerlaw_mle_alpha(const std::vector<std::uint32_t>& degrees, std::uint32_t xmin);

/// Hurwitz zeta: sum over k >= 0 of (q + k)^(-s), for s > 1, q >= 1.
/// Direct summation plus Euler-Maclaurin tail.
double hurwitz_zeta(double s, double q);

struct TopologyReport {
    OmegaResult omega;
    int omega_niter = 0;
    int omega_nrand = 0;
    std::uint64_t omega_seed = 0;
    PowerlawFit powerlaw;
};

/// Omega on the giant component plus a power-law fit of the degree
/// distribution (nodes of degree 0 are excluded from the fit).
TopologyReport compute_topology_report(const CoauthorGraph& giant, const CoauthorGraph& full,
                                       const OmegaParams& params);

std::string to_json_string(const TopologyReport& report);

} // namespace coauth
