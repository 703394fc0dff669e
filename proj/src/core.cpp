#include "smopt/core.hpp"

#include <algorithm>
#include <deque>

#include "smopt/error.hpp"

namespace smopt {

PreferenceSystem PreferenceSystem::create(std::vector<NodeId> boys, std::vector<NodeId> girls,
                                          std::vector<Edge> edges,
                                          std::map<NodeId, std::vector<EdgeId>> prefs) {
    PreferenceSystem sys;
    std::sort(boys.begin(), boys.end());
    std::sort(girls.begin(), girls.end());
    if (std::adjacent_find(boys.begin(), boys.end()) != boys.end())
        fail_input("duplicate boy id");
    if (std::adjacent_find(girls.begin(), girls.end()) != girls.end())
        fail_input("duplicate girl id");
    sys.boys_ = std::move(boys);
    sys.girls_ = std::move(girls);
    sys.boy_set_ = {sys.boys_.begin(), sys.boys_.end()};
    sys.girl_set_ = {sys.girls_.begin(), sys.girls_.end()};
    for (const NodeId& g : sys.girls_)
        if (sys.boy_set_.count(g)) fail_input("node id on both sides: " + g);

    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    std::map<NodeId, std::set<EdgeId>> incident;
    for (const Edge& e : edges) {
        if (sys.edge_index_.count(e.id)) fail_input("duplicate edge id: " + e.id);
        if (!sys.boy_set_.count(e.boy)) fail_input("edge " + e.id + " has unknown boy " + e.boy);
        if (!sys.girl_set_.count(e.girl)) fail_input("edge " + e.id + " has unknown girl " + e.girl);
        sys.edge_index_[e.id] = static_cast<int>(sys.edges_.size());
        sys.edges_.push_back(e);
        incident[e.boy].insert(e.id);
        incident[e.girl].insert(e.id);
    }

    for (const auto& [node, order] : prefs) {
        if (!sys.boy_set_.count(node) && !sys.girl_set_.count(node))
            fail_input("preference list for unknown node " + node);
        std::set<EdgeId> seen;
        for (const EdgeId& e : order) {
            if (!seen.insert(e).second) fail_input("tie (repeated edge " + e + ") in list of " + node);
            if (!incident[node].count(e)) fail_input("edge " + e + " in list of " + node + " is not incident");
        }
        if (seen != incident[node]) fail_input("incomplete preference list for node " + node);
        for (int i = 0; i < static_cast<int>(order.size()); ++i) sys.rank_[node][order[i]] = i;
    }
    for (const auto& [node, inc] : incident)
        if (!inc.empty() && !prefs.count(node)) fail_input("missing preference list for node " + node);
    sys.prefs_ = std::move(prefs);
    return sys;
}

const Edge& PreferenceSystem::edge(const EdgeId& e) const {
    auto it = edge_index_.find(e);
    if (it == edge_index_.end()) fail_input("unknown edge id: " + e);
    return edges_[it->second];
}

const NodeId& PreferenceSystem::other_end(const EdgeId& e, const NodeId& v) const {
    const Edge& ed = edge(e);
    return ed.boy == v ? ed.girl : ed.boy;
}

int PreferenceSystem::rank_at(const NodeId& v, const EdgeId& e) const {
    auto nit = rank_.find(v);
    if (nit == rank_.end()) fail_input("node " + v + " has no preference list");
    auto eit = nit->second.find(e);
    if (eit == nit->second.end()) fail_input("edge " + e + " not incident to " + v);
    return eit->second;
}

bool PreferenceSystem::prefers(const NodeId& v, const EdgeId& e, const EdgeId& f) const {
    return rank_at(v, e) < rank_at(v, f);
}

bool PreferenceSystem::operator==(const PreferenceSystem& other) const {
    if (boys_ != other.boys_ || girls_ != other.girls_ || prefs_ != other.prefs_) return false;
    if (edges_.size() != other.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].id != other.edges_[i].id || edges_[i].boy != other.edges_[i].boy ||
            edges_[i].girl != other.edges_[i].girl)
            return false;
    }
    return true;
}

namespace {

void check_matching(const PreferenceSystem& sys, const Matching& m) {
    std::set<NodeId> used;
    for (const EdgeId& e : m.edges) {
        const Edge& ed = sys.edge(e); // throws on unknown id
        if (!used.insert(ed.boy).second) fail_input("two matching edges share node " + ed.boy);
        if (!used.insert(ed.girl).second) fail_input("two matching edges share node " + ed.girl);
    }
}

} // namespace

Matching gale_shapley(const PreferenceSystem& sys, Side proposing) {
    const bool girls_propose = proposing == Side::girls;
    const std::vector<NodeId>& proposers = girls_propose ? sys.girls() : sys.boys();

    // next[p]: position in p's list of the next edge to propose along.
    std::map<NodeId, size_t> next;
    std::map<NodeId, EdgeId> held; // acceptor side: currently held edge
    std::deque<NodeId> free(proposers.begin(), proposers.end());

    std::map<NodeId, EdgeId> engaged; // proposer -> edge
    while (!free.empty()) {
        NodeId p = free.front();
        free.pop_front();
        auto lit = sys.prefs().find(p);
        if (lit == sys.prefs().end()) continue;
        const std::vector<EdgeId>& list = lit->second;
        size_t& pos = next[p];
        while (pos < list.size()) {
            const EdgeId e = list[pos];
            ++pos;
            const NodeId q = sys.other_end(e, p);
            auto hit = held.find(q);
            if (hit == held.end()) {
                held[q] = e;
                engaged[p] = e;
                break;
            }
            if (sys.prefers(q, e, hit->second)) {
                const NodeId loser = sys.other_end(hit->second, q);
                engaged.erase(loser);
                free.push_back(loser);
                held[q] = e;
                engaged[p] = e;
                break;
            }
        }
    }

    Matching m;
    for (const auto& [p, e] : engaged) m.edges.insert(e);
    return m;
}

bool is_stable(const PreferenceSystem& sys, const Matching& m) {
    check_matching(sys, m);
    std::map<NodeId, EdgeId> at; // node -> its matching edge
    for (const EdgeId& e : m.edges) {
        at[sys.edge(e).boy] = e;
        at[sys.edge(e).girl] = e;
    }
    for (const Edge& f : sys.edges()) {
        if (m.contains(f.id)) continue;
        bool dominated = false;
        for (const NodeId& v : {f.boy, f.girl}) {
            auto it = at.find(v);
            if (it != at.end() && sys.prefers(v, it->second, f.id)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) return false;
    }
    return true;
}

namespace {

// One pass of the paper's marginal-edge deletion: for the best edge e = st
// at s, every edge at t worse than e is deleted. Iterated to fixpoint.
PreferenceSystem delete_to_fixpoint(const PreferenceSystem& sys,
                                    const std::set<EdgeId>& initially_dead) {
    std::set<EdgeId> dead = initially_dead;
    std::map<NodeId, std::vector<EdgeId>> lists = sys.prefs();
    auto alive_best = [&](const NodeId& v) -> std::optional<EdgeId> {
        auto it = lists.find(v);
        if (it == lists.end()) return std::nullopt;
        for (const EdgeId& e : it->second)
            if (!dead.count(e)) return e;
        return std::nullopt;
    };

    std::vector<NodeId> nodes;
    nodes.insert(nodes.end(), sys.boys().begin(), sys.boys().end());
    nodes.insert(nodes.end(), sys.girls().begin(), sys.girls().end());
    std::sort(nodes.begin(), nodes.end());

    bool changed = true;
    while (changed) {
        changed = false;
        for (const NodeId& s : nodes) {
            auto best = alive_best(s);
            if (!best) continue;
            const NodeId t = sys.other_end(*best, s);
            for (const EdgeId& f : lists.at(t)) {
                if (dead.count(f)) continue;
                if (sys.prefers(t, *best, f)) {
                    dead.insert(f);
                    changed = true;
                }
            }
        }
    }

    std::vector<Edge> edges;
    std::set<NodeId> touched;
    for (const Edge& e : sys.edges()) {
        if (dead.count(e.id)) continue;
        edges.push_back(e);
        touched.insert(e.boy);
        touched.insert(e.girl);
    }
    std::vector<NodeId> boys, girls;
    for (const NodeId& b : sys.boys())
        if (touched.count(b)) boys.push_back(b);
    for (const NodeId& g : sys.girls())
        if (touched.count(g)) girls.push_back(g);
    std::map<NodeId, std::vector<EdgeId>> prefs;
    for (const auto& [node, order] : sys.prefs()) {
        if (!touched.count(node)) continue;
        std::vector<EdgeId> kept;
        for (const EdgeId& e : order)
            if (!dead.count(e)) kept.push_back(e);
        prefs[node] = std::move(kept);
    }
    return PreferenceSystem::create(boys, girls, edges, prefs);
}

// Girl-best edge at every girl. After the deletion fixpoint this set is a
// stable matching of the current system.
Matching girl_best_edges(const PreferenceSystem& sys) {
    Matching m;
    for (const NodeId& w : sys.girls()) {
        auto it = sys.prefs().find(w);
        if (it != sys.prefs().end() && !it->second.empty()) m.edges.insert(it->second.front());
    }
    return m;
}

} // namespace

CoreSystem reduce_to_core(const PreferenceSystem& sys) {
    PreferenceSystem cur = delete_to_fixpoint(sys, {});
    // Drop nodes that no stable matching covers (all stable matchings cover
    // the same node set, namely the one covered by the girl-best edges).
    for (;;) {
        Matching gb = girl_best_edges(cur);
        std::set<NodeId> covered;
        for (const EdgeId& e : gb.edges) {
            covered.insert(cur.edge(e).boy);
            covered.insert(cur.edge(e).girl);
        }
        std::set<EdgeId> dead;
        for (const Edge& e : cur.edges())
            if (!covered.count(e.boy) || !covered.count(e.girl)) dead.insert(e.id);
        if (dead.empty()) break;
        cur = delete_to_fixpoint(cur, dead);
    }

    CoreSystem core;
    core.system = cur;
    core.girl_best_matching = girl_best_edges(cur);
    core.boy_best_matching = gale_shapley(cur, Side::boys);

    // E_st and M_e by one extendibility test per surviving edge.
    for (const Edge& e : cur.edges()) {
        Matching single;
        single.edges.insert(e.id);
        auto ext = extend_to_stable(core, single);
        if (ext) {
            core.stable_edges.insert(e.id);
            core.m_e[e.id] = *ext;
        }
    }
    return core;
}

std::optional<Matching> extend_to_stable(const CoreSystem& core, const Matching& m) {
    const PreferenceSystem& sys = core.system;
    check_matching(sys, m);

    std::map<NodeId, EdgeId> at;
    for (const EdgeId& e : m.edges) {
        at[sys.edge(e).boy] = e;
        at[sys.edge(e).girl] = e;
    }
    // G' = (G - m) minus all edges dominated by m.
    std::set<EdgeId> drop(m.edges.begin(), m.edges.end());
    for (const Edge& f : sys.edges()) {
        if (drop.count(f.id)) continue;
        for (const NodeId& v : {f.boy, f.girl}) {
            auto it = at.find(v);
            if (it != at.end() && sys.prefers(v, it->second, f.id)) {
                drop.insert(f.id);
                break;
            }
        }
    }
    std::vector<Edge> edges;
    std::set<NodeId> touched;
    for (const Edge& e : sys.edges()) {
        if (drop.count(e.id)) continue;
        edges.push_back(e);
        touched.insert(e.boy);
        touched.insert(e.girl);
    }
    std::vector<NodeId> boys, girls;
    for (const NodeId& b : sys.boys())
        if (touched.count(b)) boys.push_back(b);
    for (const NodeId& g : sys.girls())
        if (touched.count(g)) girls.push_back(g);
    std::map<NodeId, std::vector<EdgeId>> prefs;
    for (const auto& [node, order] : sys.prefs()) {
        if (!touched.count(node)) continue;
        std::vector<EdgeId> kept;
        for (const EdgeId& e : order)
            if (!drop.count(e)) kept.push_back(e);
        prefs[node] = std::move(kept);
    }
    PreferenceSystem rest = PreferenceSystem::create(boys, girls, edges, prefs);

    Matching mg = gale_shapley(rest, Side::girls);
    Matching combined;
    combined.edges = m.edges;
    combined.edges.insert(mg.edges.begin(), mg.edges.end());
    std::set<NodeId> used;
    for (const EdgeId& e : combined.edges) {
        if (!used.insert(sys.edge(e).boy).second) return std::nullopt;
        if (!used.insert(sys.edge(e).girl).second) return std::nullopt;
    }
    return combined;
}

namespace {

Matching select_girl_extreme(const CoreSystem& core, const Matching& m1, const Matching& m2,
                             bool best) {
    const PreferenceSystem& sys = core.system;
    for (const Matching* m : {&m1, &m2})
        if (!is_stable(sys, *m)) fail_contract("lattice operation on a non-stable matching");
    std::map<NodeId, EdgeId> pick;
    for (const Matching* m : {&m1, &m2}) {
        for (const EdgeId& e : m->edges) {
            const NodeId& w = sys.edge(e).girl;
            auto it = pick.find(w);
            if (it == pick.end()) {
                pick[w] = e;
            } else if (it->second != e && (sys.prefers(w, e, it->second) == best)) {
                it->second = e;
            }
        }
    }
    Matching out;
    for (const auto& [w, e] : pick) out.edges.insert(e);
    return out;
}

} // namespace

Matching meet(const CoreSystem& core, const Matching& m1, const Matching& m2) {
    return select_girl_extreme(core, m1, m2, true);
}

Matching join(const CoreSystem& core, const Matching& m1, const Matching& m2) {
    return select_girl_extreme(core, m1, m2, false);
}

} // namespace smopt
