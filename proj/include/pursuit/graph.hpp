#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pursuit/group.hpp"

namespace pursuit {

using Adjacency = std::vector<std::vector<int>>;

enum class Family { cayley, cayley_sum, twisted_cayley, twisted_cayley_sum };

const char* family_name(Family f);
Family family_from_name(const std::string& name);

/// Adjacency of one of the four algebraic families, tagged with the data
/// that defined it. Immutable after build.
struct AlgebraicGraph {
    Family family;
    GroupPtr group;
    GenSet genset;
    std::optional<Automorphism> sigma;
    Adjacency adjacency;  // sorted out-neighbor lists, multi-edges collapsed
    bool undirected = false;
    std::vector<int> loops;

    int size() const { return static_cast<int>(adjacency.size()); }
    bool has_edge(int u, int v) const;
    /// Where the defining rule sends u under generator s.
    Elem move_target(Elem u, Elem s) const;
    std::string instance_hash() const;
    std::string describe() const;
};

/// sigma is required for the twisted families (order must be 1 or 2) and
/// rejected for the plain ones.
AlgebraicGraph build_graph(Family family, GroupPtr group, GenSet genset,
                           std::optional<Automorphism> sigma = std::nullopt);

struct UndirectednessCheck {
    bool predicted;  // from the family's closed-form criterion
    bool observed;   // from the adjacency transpose
    bool agree;
    std::string criterion;
};

/// Closed-form undirectedness predictions: symmetric S (cayley),
/// conjugation-closed S (cayley-sum), and the sigma formulas for the twisted
/// families. Disagreement with the transpose is reported, never hidden.
UndirectednessCheck check_undirected_criterion(const AlgebraicGraph& g);

enum class Connectivity { undirected_only, strong };

/// BFS connectivity. Throws ValidationError on a directed graph unless called
/// with Connectivity::strong, which checks strong connectivity instead.
bool is_connected(const AlgebraicGraph& g, Connectivity mode = Connectivity::undirected_only);
bool adjacency_connected(const Adjacency& adj);
bool adjacency_strongly_connected(const Adjacency& adj);
bool adjacency_is_undirected(const Adjacency& adj);

enum class ExportFormat { edge_list, adjacency_json, dot };
ExportFormat export_format_from_name(const std::string& name);
std::string export_graph(const AlgebraicGraph& g, ExportFormat format);

/// Plain graphs for oracle control instances. Edge-list lines "u v".
Adjacency adjacency_from_edge_list(const std::string& text);
std::string adjacency_to_edge_list(const Adjacency& adj, bool undirected);
std::vector<int> bfs_distances(const Adjacency& adj, int source);

}  // namespace pursuit
