#include "smopt/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "smopt/error.hpp"

namespace smopt {

namespace {

PreferenceSystem make(const std::vector<NodeId>& boys, const std::vector<NodeId>& girls,
                      const std::vector<Edge>& edges,
                      const std::map<NodeId, std::vector<EdgeId>>& prefs) {
    return PreferenceSystem::create(boys, girls, edges, prefs);
}

} // namespace

Fixture fixture_i1() {
    return Fixture{"I1", make({"u1"}, {"w1"}, {{"u1w1", "u1", "w1"}},
                              {{"u1", {"u1w1"}}, {"w1", {"u1w1"}}})};
}

Fixture fixture_i2() {
    std::vector<Edge> edges{{"u1w1", "u1", "w1"},
                            {"u1w2", "u1", "w2"},
                            {"u2w1", "u2", "w1"},
                            {"u2w2", "u2", "w2"}};
    std::map<NodeId, std::vector<EdgeId>> prefs{{"u1", {"u1w1", "u1w2"}},
                                                {"u2", {"u2w2", "u2w1"}},
                                                {"w1", {"u2w1", "u1w1"}},
                                                {"w2", {"u1w2", "u2w2"}}};
    return Fixture{"I2", make({"u1", "u2"}, {"w1", "w2"}, edges, prefs)};
}

Fixture fixture_i3() {
    // u_i: w_i > w_{i+1} > w_{i+2};  w_j: u_{j+1} > u_{j+2} > u_j (cyclic).
    std::vector<NodeId> boys{"u1", "u2", "u3"}, girls{"w1", "w2", "w3"};
    std::vector<Edge> edges;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            edges.push_back(Edge{"u" + std::to_string(i) + "w" + std::to_string(j),
                                 "u" + std::to_string(i), "w" + std::to_string(j)});
    auto cyc = [](int x) { return (x - 1) % 3 + 1; };
    std::map<NodeId, std::vector<EdgeId>> prefs;
    for (int i = 1; i <= 3; ++i) {
        std::vector<EdgeId> list;
        for (int k = 0; k < 3; ++k)
            list.push_back("u" + std::to_string(i) + "w" + std::to_string(cyc(i + k)));
        prefs["u" + std::to_string(i)] = list;
    }
    for (int j = 1; j <= 3; ++j) {
        std::vector<EdgeId> list;
        for (int k = 1; k <= 3; ++k)
            list.push_back("u" + std::to_string(cyc(j + k)) + "w" + std::to_string(j));
        prefs["w" + std::to_string(j)] = list;
    }
    return Fixture{"I3", make(boys, girls, edges, prefs)};
}

namespace {

// Backtracking state for the stability-pruned matching enumeration.
struct Enumerator {
    const PreferenceSystem& sys;
    std::vector<NodeId> boys;
    std::map<NodeId, EdgeId> girl_edge;     // current assignment at girls
    std::map<NodeId, int> girl_requirement; // strictest rank the girl must beat
    std::vector<Matching> found;

    explicit Enumerator(const PreferenceSystem& s) : sys(s), boys(s.boys()) {}

    // e must end up dominated at its girl: the girl's matching edge has to be
    // strictly better than e in her list.
    bool require_at_girl(const NodeId& w, const EdgeId& e, std::map<NodeId, int>& changed) {
        int bound = sys.rank_at(w, e);
        auto git = girl_edge.find(w);
        if (git != girl_edge.end()) return sys.rank_at(w, git->second) < bound;
        auto it = girl_requirement.find(w);
        if (it == girl_requirement.end() || bound < it->second) {
            if (!changed.count(w))
                changed[w] = it == girl_requirement.end() ? -1 : it->second;
            girl_requirement[w] = bound;
        }
        return true;
    }

    void recurse(size_t bi, std::vector<EdgeId>& chosen) {
        if (bi == boys.size()) {
            // Unmatched girls must have no pending requirement and no edge to
            // an unmatched boy (handled below through requirements), so the
            // remaining check is that every requirement was satisfied.
            for (const auto& [w, bound] : girl_requirement) {
                auto git = girl_edge.find(w);
                if (git == girl_edge.end()) return;
                (void)bound; // matched case was checked when the edge arrived
            }
            Matching m;
            m.edges = {chosen.begin(), chosen.end()};
            found.push_back(m);
            return;
        }
        const NodeId& b = boys[bi];
        auto lit = sys.prefs().find(b);
        const std::vector<EdgeId> empty;
        const std::vector<EdgeId>& list = lit == sys.prefs().end() ? empty : lit->second;

        // Option 1: match b along one of its edges.
        for (const EdgeId& e : list) {
            const NodeId& w = sys.edge(e).girl;
            if (girl_edge.count(w)) continue;
            int req_bound = -2;
            auto rit = girl_requirement.find(w);
            if (rit != girl_requirement.end()) req_bound = rit->second;
            if (req_bound != -2 && sys.rank_at(w, e) >= req_bound) continue;

            std::map<NodeId, int> changed;
            girl_edge[w] = e;
            bool ok = true;
            for (const EdgeId& f : list) {
                if (f == e || sys.prefers(b, e, f)) continue; // dominated at b
                if (!require_at_girl(sys.edge(f).girl, f, changed)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                chosen.push_back(e);
                recurse(bi + 1, chosen);
                chosen.pop_back();
            }
            girl_edge.erase(w);
            for (const auto& [w2, old] : changed) {
                if (old < 0)
                    girl_requirement.erase(w2);
                else
                    girl_requirement[w2] = old;
            }
        }

        // Option 2: leave b unmatched; every incident edge then needs
        // domination at its girl.
        {
            std::map<NodeId, int> changed;
            bool ok = true;
            for (const EdgeId& f : list) {
                if (!require_at_girl(sys.edge(f).girl, f, changed)) {
                    ok = false;
                    break;
                }
            }
            if (ok) recurse(bi + 1, chosen);
            for (const auto& [w2, old] : changed) {
                if (old < 0)
                    girl_requirement.erase(w2);
                else
                    girl_requirement[w2] = old;
            }
        }
    }
};

} // namespace

std::vector<Matching> enumerate_stable(const PreferenceSystem& sys, int node_bound) {
    if (static_cast<int>(sys.boys().size()) > node_bound ||
        static_cast<int>(sys.girls().size()) > node_bound)
        fail_resource("instance exceeds the oracle enumeration bound");
    Enumerator en(sys);
    std::vector<EdgeId> chosen;
    en.recurse(0, chosen);
    std::sort(en.found.begin(), en.found.end());
    en.found.erase(std::unique(en.found.begin(), en.found.end()), en.found.end());
    return en.found;
}

namespace {

void blocker_search(const std::vector<std::vector<EdgeId>>& members,
                    const std::map<EdgeId, long long>& h, std::set<EdgeId>& picked,
                    long long cost, long long& best) {
    if (cost >= best) return;
    int uncovered = -1;
    for (size_t i = 0; i < members.size(); ++i) {
        bool hit = false;
        for (const EdgeId& e : members[i])
            if (picked.count(e)) {
                hit = true;
                break;
            }
        if (!hit) {
            uncovered = static_cast<int>(i);
            break;
        }
    }
    if (uncovered < 0) {
        best = cost;
        return;
    }
    for (const EdgeId& e : members[uncovered]) {
        if (picked.count(e)) continue;
        auto it = h.find(e);
        long long he = it == h.end() ? 0 : it->second;
        picked.insert(e);
        blocker_search(members, h, picked, cost + he, best);
        picked.erase(e);
    }
}

} // namespace

long long brute_min_blocker(const PreferenceSystem& sys, const std::vector<Matching>& family,
                            const std::map<EdgeId, long long>& h) {
    (void)sys;
    if (family.empty()) return 0;
    std::vector<std::vector<EdgeId>> members;
    for (const Matching& m : family) members.emplace_back(m.edges.begin(), m.edges.end());
    const long long kInf = (1LL << 60);
    long long best = kInf;
    std::set<EdgeId> picked;
    blocker_search(members, h, picked, 0, best);
    if (best == kInf) fail_resource("no blocker found (empty member?)");
    return best;
}

long long brute_max_union(const std::vector<Matching>& family, int ell,
                          const std::map<EdgeId, long long>& w) {
    if (family.empty() || ell <= 0) return 0;
    long long best = 0;
    std::vector<int> pick;
    auto weight_of_union = [&]() {
        std::set<EdgeId> u;
        for (int i : pick) u.insert(family[i].edges.begin(), family[i].edges.end());
        long long total = 0;
        for (const EdgeId& e : u) {
            auto it = w.find(e);
            total += it == w.end() ? 0 : it->second;
        }
        return total;
    };
    std::function<void(int, int)> go = [&](int from, int left) {
        if (left == 0) {
            best = std::max(best, weight_of_union());
            return;
        }
        for (int i = from; i < static_cast<int>(family.size()); ++i) {
            pick.push_back(i);
            go(i, left - 1); // repetition allowed
            pick.pop_back();
        }
    };
    go(0, ell);
    return best;
}

std::vector<long long> brute_lex_fair(const PreferenceSystem& sys,
                                      const std::vector<Matching>& family,
                                      const std::map<NodeId, std::map<EdgeId, int>>& levels,
                                      int level_cap) {
    if (family.empty()) fail_input("brute_lex_fair needs a nonempty family");
    std::vector<long long> best;
    for (const Matching& m : family) {
        std::vector<long long> counts(level_cap + 1, 0);
        for (const EdgeId& e : m.edges) {
            const Edge& ed = sys.edge(e);
            counts[levels.at(ed.boy).at(e)] += 1;
            counts[levels.at(ed.girl).at(e)] += 1;
        }
        if (best.empty() || counts < best) best = counts;
    }
    return best;
}

long long brute_max_antichain(const std::vector<std::string>& elements,
                              const std::set<std::pair<std::string, std::string>>& less_than,
                              const std::map<std::string, long long>& w) {
    int n = static_cast<int>(elements.size());
    if (n > 20) fail_resource("antichain oracle bound exceeded");
    long long best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool anti = true;
        long long weight = 0;
        for (int i = 0; i < n && anti; ++i) {
            if (!(mask >> i & 1)) continue;
            auto it = w.find(elements[i]);
            weight += it == w.end() ? 0 : it->second;
            for (int j = i + 1; j < n && anti; ++j) {
                if (!(mask >> j & 1)) continue;
                if (less_than.count({elements[i], elements[j]}) ||
                    less_than.count({elements[j], elements[i]}))
                    anti = false;
            }
        }
        if (anti) best = std::max(best, weight);
    }
    return best;
}

PreferenceSystem random_instance(int n_boys, int n_girls, double edge_density,
                                 unsigned long seed) {
    if (n_boys < 0 || n_girls < 0 || edge_density < 0.0 || edge_density > 1.0)
        fail_input("random_instance parameters out of range");
    std::mt19937_64 rng(seed);
    std::vector<NodeId> boys, girls;
    for (int i = 1; i <= n_boys; ++i) boys.push_back("u" + std::to_string(i));
    for (int j = 1; j <= n_girls; ++j) girls.push_back("w" + std::to_string(j));

    std::vector<Edge> edges;
    std::map<NodeId, std::vector<EdgeId>> incident;
    // Density threshold drawn per pair, in a fixed row-major order.
    for (const NodeId& b : boys) {
        for (const NodeId& g : girls) {
            double coin = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
            if (coin < edge_density) {
                EdgeId id = b + g;
                edges.push_back(Edge{id, b, g});
                incident[b].push_back(id);
                incident[g].push_back(id);
            }
        }
    }
    std::map<NodeId, std::vector<EdgeId>> prefs;
    std::vector<NodeId> nodes;
    nodes.insert(nodes.end(), boys.begin(), boys.end());
    nodes.insert(nodes.end(), girls.begin(), girls.end());
    for (const NodeId& v : nodes) {
        auto it = incident.find(v);
        if (it == incident.end()) continue;
        std::vector<EdgeId> list = it->second;
        std::shuffle(list.begin(), list.end(), rng);
        prefs[v] = list;
    }
    std::vector<NodeId> kept_boys, kept_girls;
    for (const NodeId& b : boys)
        if (incident.count(b)) kept_boys.push_back(b);
    for (const NodeId& g : girls)
        if (incident.count(g)) kept_girls.push_back(g);
    if (edges.empty()) return PreferenceSystem::create({}, {}, {}, {});
    return PreferenceSystem::create(kept_boys, kept_girls, edges, prefs);
}

} // namespace smopt
