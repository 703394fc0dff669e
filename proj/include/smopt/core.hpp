#ifndef SMOPT_CORE_HPP
#define SMOPT_CORE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace smopt {

using NodeId = std::string;
using EdgeId = std::string;

struct Edge {
    EdgeId id;
    NodeId boy;
    NodeId girl;
};

/// Bipartite preference system: two node sides, edges (parallel edges
/// allowed), and a strict best-to-worst order over the incident edge ids
/// at every node.
class PreferenceSystem {
public:
    PreferenceSystem() = default;

    // Validates all invariants (disjoint sides, orders covering exactly the
    // incident edges, no duplicates) and throws ErrorKind::input otherwise.
    static PreferenceSystem create(std::vector<NodeId> boys, std::vector<NodeId> girls,
                                   std::vector<Edge> edges,
                                   std::map<NodeId, std::vector<EdgeId>> prefs);

    const std::vector<NodeId>& boys() const { return boys_; }
    const std::vector<NodeId>& girls() const { return girls_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::map<NodeId, std::vector<EdgeId>>& prefs() const { return prefs_; }

    bool has_edge(const EdgeId& e) const { return edge_index_.count(e) > 0; }
    const Edge& edge(const EdgeId& e) const;
    bool is_boy(const NodeId& v) const { return boy_set_.count(v) > 0; }
    bool is_girl(const NodeId& v) const { return girl_set_.count(v) > 0; }

    // Endpoint of e on the other side of v.
    const NodeId& other_end(const EdgeId& e, const NodeId& v) const;

    // 0-based position of e in v's order; lower is better.
    int rank_at(const NodeId& v, const EdgeId& e) const;

    // true iff e is strictly better than f at their common endpoint v.
    bool prefers(const NodeId& v, const EdgeId& e, const EdgeId& f) const;

    bool operator==(const PreferenceSystem& other) const;

private:
    std::vector<NodeId> boys_, girls_;
    std::vector<Edge> edges_;
    std::map<NodeId, std::vector<EdgeId>> prefs_;
    std::map<EdgeId, int> edge_index_;
    std::set<NodeId> boy_set_, girl_set_;
    std::map<NodeId, std::map<EdgeId, int>> rank_;
};

struct Matching {
    std::set<EdgeId> edges;

    bool contains(const EdgeId& e) const { return edges.count(e) > 0; }
    bool operator==(const Matching& o) const { return edges == o.edges; }
    bool operator<(const Matching& o) const { return edges < o.edges; }
};

enum class Side { boys, girls };

// Deferred-acceptance. With girls proposing the result is the girl-optimal
// stable matching, with boys proposing the boy-optimal one. Nodes may stay
// uncovered in an unreduced system.
Matching gale_shapley(const PreferenceSystem& sys, Side proposing);

// Definitional stability check: every non-matching edge must be dominated
// at one of its endpoints by an edge of m.
bool is_stable(const PreferenceSystem& sys, const Matching& m);

/// Reduced system in which every stable matching is perfect, together with
/// the stable edges, the two extreme matchings and the table e -> M_e
/// (girl-best stable matching containing e).
struct CoreSystem {
    PreferenceSystem system;
    std::set<EdgeId> stable_edges;
    Matching girl_best_matching;
    Matching boy_best_matching;
    std::map<EdgeId, Matching> m_e;

    int n() const { return static_cast<int>(system.girls().size()); }
};

// Edge-deletion fixpoint ("delete at t everything worse than the best edge
// at s"), isolated/never-covered node removal, then E_st and M_e via one
// extend_to_stable call per surviving edge.
CoreSystem reduce_to_core(const PreferenceSystem& sys);

// Girls-proposing Gale-Shapley on G' = (G - m) minus the edges dominated
// by m. Returns the girl-best stable matching including m, or nullopt when
// m is not extendible.
std::optional<Matching> extend_to_stable(const CoreSystem& core, const Matching& m);

// Lattice operations on stable matchings of the reduced system:
// meet = girl-best edges of m1 u m2, join = girl-worst edges.
Matching meet(const CoreSystem& core, const Matching& m1, const Matching& m2);
Matching join(const CoreSystem& core, const Matching& m1, const Matching& m2);

} // namespace smopt

#endif
