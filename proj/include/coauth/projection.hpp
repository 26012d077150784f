#pragma once

#include "coauth/corpus.hpp"
#include "coauth/graph.hpp"

namespace coauth {

/// One-mode projection with full counting: edge (i, j) iff some paper has
/// both authors, weighted by the number of such papers. Clique expansion
/// paper by paper, so memory tracks realized edges rather than n^2.
CoauthorGraph project_full(const BipartiteGraph& b);

/// Fractional counting: each shared paper contributes 1/(N_p - 1) to the
/// pair, so every multi-authored paper distributes one unit of credit to
/// each of its authors. Single-authored papers contribute nothing; the edge
/// set is identical to project_full's.
CoauthorGraph project_newman(const BipartiteGraph& b);

/// Neighborhood-overlap reweighting of an existing projection:
/// weight(i, j) = shared co-authors of i and j / all co-authors of i and j,
/// with open neighborhoods (i not in N(i), but i in N(j) and vice versa).
/// Pairs with no shared third party keep the edge at weight 0, so
/// topology-level metrics see the same graph under every scheme.
/// Accepts full or unweighted input.
CoauthorGraph reweight_jaccard(const CoauthorGraph& g);

/// Same topology, every weight 1.
CoauthorGraph strip_weights(const CoauthorGraph& g);

} // namespace coauth
