#ifndef SMOPT_ASSOC_HPP
#define SMOPT_ASSOC_HPP

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "smopt/core.hpp"
#include "smopt/ringset.hpp"

namespace smopt {

/// Digraph associated with a reduced preference system: one internally
/// disjoint source-to-sink girl-path per girl whose arcs are her stable
/// edges in preference order, plus dummy arcs from the tail of each stable
/// arc into the shore of the girl-best stable matching through that edge.
/// Stable matchings correspond to the cuts of the ring R_D.
class AssocDigraph {
public:
    static AssocDigraph build(const CoreSystem& core);

    int node_count() const { return static_cast<int>(node_names_.size()); }
    int source() const { return source_; }
    int sink() const { return sink_; }
    const std::string& node_name(int v) const { return node_names_[v]; }

    // Stable arc a_e = (tail, head) of a stable edge.
    std::pair<int, int> stable_arc(const EdgeId& e) const;
    const std::map<EdgeId, std::pair<int, int>>& stable_arcs() const { return stable_arcs_; }

    // Girl-paths, girl-best arc first.
    const std::map<NodeId, std::vector<EdgeId>>& girl_paths() const { return girl_paths_; }

    const std::set<std::pair<int, int>>& dummy_arcs() const { return dummy_arcs_; }
    const RingCode& ring() const { return ring_; }

    // L(M): union of the source-side prefixes of the girl-paths up to the
    // tails of the matching's arcs. Requires a stable matching.
    std::set<int> shore_of(const CoreSystem& core, const Matching& m) const;

    // Inverse direction: the stable matching whose arcs leave the member z.
    Matching matching_of(const std::set<int>& z) const;

private:
    std::vector<std::string> node_names_;
    int source_ = 0;
    int sink_ = 0;
    std::map<EdgeId, std::pair<int, int>> stable_arcs_;
    std::map<NodeId, std::vector<EdgeId>> girl_paths_;
    std::set<std::pair<int, int>> dummy_arcs_;
    RingCode ring_;
    std::map<EdgeId, int> position_; // 0-based rank of e within its girl-path
};

} // namespace smopt

#endif
