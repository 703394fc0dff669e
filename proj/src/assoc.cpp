#include "smopt/assoc.hpp"

#include <algorithm>
#include <deque>

#include "smopt/error.hpp"

namespace smopt {

AssocDigraph AssocDigraph::build(const CoreSystem& core) {
    AssocDigraph d;
    const PreferenceSystem& sys = core.system;

    d.node_names_.push_back("s*");
    d.source_ = 0;

    // Girl-paths: interior node (w, i) sits between the i-th and (i+1)-th
    // stable edge of w (1-based, girl-best first).
    std::map<std::pair<NodeId, int>, int> interior;
    for (const NodeId& w : sys.girls()) {
        std::vector<EdgeId> path;
        for (const EdgeId& e : sys.prefs().at(w))
            if (core.stable_edges.count(e)) path.push_back(e);
        if (path.empty()) fail_contract("girl " + w + " has no stable edge in the core");
        for (int i = 1; i < static_cast<int>(path.size()); ++i) {
            interior[{w, i}] = static_cast<int>(d.node_names_.size());
            d.node_names_.push_back(w + "#" + std::to_string(i));
        }
        d.girl_paths_[w] = std::move(path);
    }
    d.sink_ = static_cast<int>(d.node_names_.size());
    d.node_names_.push_back("t*");

    for (const auto& [w, path] : d.girl_paths_) {
        for (int i = 0; i < static_cast<int>(path.size()); ++i) {
            int tail = i == 0 ? d.source_ : interior.at({w, i});
            int head = i + 1 == static_cast<int>(path.size()) ? d.sink_ : interior.at({w, i + 1});
            d.stable_arcs_[path[i]] = {tail, head};
            d.position_[path[i]] = i;
        }
    }

    // Dummy arcs: from t_e to every node of L(M_e) except t_e itself.
    for (const EdgeId& e : core.stable_edges) {
        int tail = d.stable_arcs_.at(e).first;
        std::set<int> shore = d.shore_of(core, core.m_e.at(e));
        for (int v : shore)
            if (v != tail) d.dummy_arcs_.insert({tail, v});
    }

    // Ring code of R_D: C(u) is the dummy-arc reachability closure of u
    // (it always picks up s*); C(t*) is the whole ground set.
    std::vector<std::vector<int>> dummy_out(d.node_count());
    for (auto [a, b] : d.dummy_arcs_) dummy_out[a].push_back(b);
    std::vector<std::set<int>> code(d.node_count());
    for (int u = 0; u < d.node_count(); ++u) {
        if (u == d.sink_) {
            for (int v = 0; v < d.node_count(); ++v) code[u].insert(v);
            continue;
        }
        std::deque<int> queue{u, d.source_};
        std::set<int>& cl = code[u];
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            if (!cl.insert(x).second) continue;
            for (int y : dummy_out[x])
                if (!cl.count(y)) queue.push_back(y);
        }
    }
    d.ring_ = RingCode(d.node_count(), d.source_, d.sink_, std::move(code));
    return d;
}

std::pair<int, int> AssocDigraph::stable_arc(const EdgeId& e) const {
    auto it = stable_arcs_.find(e);
    if (it == stable_arcs_.end()) fail_input("edge " + e + " has no stable arc");
    return it->second;
}

std::set<int> AssocDigraph::shore_of(const CoreSystem& core, const Matching& m) const {
    if (!is_stable(core.system, m) || m.edges.size() != static_cast<size_t>(core.n()))
        fail_contract("shore_of requires a stable matching of the core");
    std::set<int> shore{source_};
    for (const EdgeId& e : m.edges) {
        const NodeId& w = core.system.edge(e).girl;
        const std::vector<EdgeId>& path = girl_paths_.at(w);
        for (const EdgeId& f : path) {
            if (f == e) break;
            shore.insert(stable_arcs_.at(f).second); // interior node after f
        }
    }
    return shore;
}

Matching AssocDigraph::matching_of(const std::set<int>& z) const {
    if (!ring_.is_member(z) || z.empty() || static_cast<int>(z.size()) == node_count())
        fail_input("matching_of requires a nontrivial member of R_D");
    Matching m;
    for (const auto& [w, path] : girl_paths_) {
        int crossings = 0;
        for (const EdgeId& e : path) {
            auto [tail, head] = stable_arcs_.at(e);
            if (z.count(tail) && !z.count(head)) {
                m.edges.insert(e);
                ++crossings;
            }
        }
        if (crossings != 1) fail_input("member is not left exactly once by girl-path of " + w);
    }
    return m;
}

} // namespace smopt
