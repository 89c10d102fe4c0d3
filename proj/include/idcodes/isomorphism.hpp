#pragma once

#include <string>
#include <vector>

#include "idcodes/graph.hpp"

namespace idcodes {

// Byte string identifying the isomorphism class: order plus the packed
// adjacency triangle of the canonical labeling. Equal keys <=> isomorphic.
using CanonicalKey = std::string;

// Guarded at n <= 16 (permutation-search path).
CanonicalKey canonical_key(const Graph& g);

// Relabels g so that vertex v becomes perm[v].
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

// g relabeled into its canonical labeling.
Graph canonical_form(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace idcodes
