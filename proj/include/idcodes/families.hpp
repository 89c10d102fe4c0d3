#pragma once

#include <string>
#include <vector>

#include "idcodes/graph.hpp"

namespace idcodes {

// A_k: order 2k, vertices 0..2k-1 standing for x_1..x_2k, with an edge
// between positions i and j exactly when |i-j| <= k-1 (1-based). A_0 is the
// empty graph, A_1 the edgeless pair, A_2 the 4-path.
Graph a_k(int k);

// Complete join of the blocks A_{parts[0]}, A_{parts[1]}, ... in order, with
// an optional universal vertex appended last. The empty part list gives A_0
// (or K_1 with the universal vertex).
Graph family_a(const std::vector<int>& parts, bool with_universal);

// family_a(parts, with_universal) joined to K_m, then one leaf attached to
// each clique vertex. Vertex order: blocks, universal vertex, clique,
// leaves (one per clique vertex, in clique order).
Graph extremal_tid(const std::vector<int>& parts, bool with_universal, int m);

// Private path P_t per base vertex, attached by one end. Base vertices keep
// their indices; vertex base.n()+t*i+j is the j-th path vertex of base
// vertex i, with j=0 adjacent to i.
Graph corona(const Graph& base, int t);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);  // K_{1,n-1} with center 0
Graph complete_graph(int n);

// K_n minus the floor(n/2) disjoint edges {0,1},{2,3},...
Graph complete_minus_matching(int n);

// Center 0; k branches 0-u_i-v_i-w_i with u_i,v_i,w_i = 3i+1,3i+2,3i+3; one
// pendant leaf 3k+1. Order 3k+2.
Graph subdivided_star(int k);

// Gap construction between location-domination and total dominating
// identification: vertices a_1..a_k (0..k-1), leaves b_i (k..2k-1), then one
// 4-vertex gadget x,x',y,z per subset S of A with |S| >= 2, allocated in
// increasing-mask order.
Graph ld_gap(int k);

// Gap construction for self-identification, k even: clique 0..k-1 minus the
// matching {x_1 x_k, x_2 x_3, ...}; one outer vertex per subset mask with
// 1 <= |mask| <= k-2 in increasing-mask order; complementary subsets are
// paired, singleton subsets pair {x_{2i+1}} with {x_{2i+2}}.
Graph sid_gap(int k);

// Gap construction for error-correcting identification: path 0..k-1; one
// outer vertex per nonempty subset mask that is no closed path neighborhood,
// in increasing-mask order; the all-of-X vertex is joined to each
// singleton-subset vertex.
Graph eid_gap(int k);

enum class TreeStatus { A, B, C, D };

char tree_status_name(TreeStatus s);

struct StatusedTree {
    Graph tree;
    std::vector<TreeStatus> status;
};

struct GrowOp {
    int phi;     // 1 or 2
    int attach;  // vertex index in the tree built so far
};

// Status-labeled tree family grown from P_8: phi1 hangs a P_5 (statuses
// D,D,B,A,C) on a C-vertex, phi2 hangs a P_4 (statuses D,B,A,C) on a
// D-vertex. New vertices are appended in path order.
StatusedTree grow_statused_tree(const std::vector<GrowOp>& ops);

}  // namespace idcodes
