#include "smopt/flow.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>

#include "smopt/error.hpp"

namespace smopt {

long long Cap::finite_value() const {
    if (inf) fail_contract("finite_value() called on an infinite capacity");
    return val;
}

std::string Cap::str() const { return inf ? "inf" : std::to_string(val); }

int FlowNetwork::add_arc(int tail, int head, Cap capacity, long long cost) {
    arcs.push_back(Arc{tail, head, capacity, cost});
    return static_cast<int>(arcs.size()) - 1;
}

long long Flow::amount(const FlowNetwork& net) const {
    long long out = 0;
    for (size_t i = 0; i < net.arcs.size(); ++i) {
        if (net.arcs[i].tail == net.source) out += value[i];
        if (net.arcs[i].head == net.source) out -= value[i];
    }
    return out;
}

namespace {

std::vector<std::vector<int>> out_arcs(const FlowNetwork& net) {
    std::vector<std::vector<int>> adj(net.node_count);
    for (int i = 0; i < static_cast<int>(net.arcs.size()); ++i) adj[net.arcs[i].tail].push_back(i);
    return adj;
}

std::vector<std::vector<int>> in_arcs(const FlowNetwork& net) {
    std::vector<std::vector<int>> adj(net.node_count);
    for (int i = 0; i < static_cast<int>(net.arcs.size()); ++i) adj[net.arcs[i].head].push_back(i);
    return adj;
}

// True iff the sink is reachable from the source along infinite-capacity
// arcs only; such a path forbids any finite cut.
bool has_all_infinite_path(const FlowNetwork& net) {
    std::vector<char> seen(net.node_count, 0);
    std::deque<int> queue{net.source};
    seen[net.source] = 1;
    auto adj = out_arcs(net);
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (u == net.sink) return true;
        for (int a : adj[u]) {
            if (!net.arcs[a].capacity.is_inf()) continue;
            int v = net.arcs[a].head;
            if (!seen[v]) {
                seen[v] = 1;
                queue.push_back(v);
            }
        }
    }
    return false;
}

void check_conservation(const FlowNetwork& net, const Flow& z) {
    if (z.value.size() != net.arcs.size()) fail_input("flow vector size mismatch");
    std::vector<long long> balance(net.node_count, 0);
    for (size_t i = 0; i < net.arcs.size(); ++i) {
        if (z.value[i] < 0) fail_input("negative flow value");
        balance[net.arcs[i].tail] += z.value[i];
        balance[net.arcs[i].head] -= z.value[i];
    }
    for (int v = 0; v < net.node_count; ++v)
        if (v != net.source && v != net.sink && balance[v] != 0)
            fail_input("flow not conserved at node " + std::to_string(v));
}

} // namespace

DijkstraResult shortest_path_dijkstra(const FlowNetwork& net) {
    for (const Arc& a : net.arcs)
        if (a.cost < 0) fail_contract("dijkstra requires nonnegative costs");
    DijkstraResult res;
    res.dist.assign(net.node_count, std::nullopt);
    res.parent_arc.assign(net.node_count, -1);
    auto adj = out_arcs(net);

    using Item = std::pair<long long, int>; // (dist, node); node index breaks ties
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    res.dist[net.source] = 0;
    heap.push({0, net.source});
    while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (!res.dist[u] || *res.dist[u] != d) continue;
        for (int a : adj[u]) {
            int v = net.arcs[a].head;
            long long nd = d + net.arcs[a].cost;
            if (!res.dist[v] || nd < *res.dist[v] ||
                (nd == *res.dist[v] && a < res.parent_arc[v])) {
                if (!res.dist[v] || nd < *res.dist[v]) {
                    res.dist[v] = nd;
                    res.parent_arc[v] = a;
                    heap.push({nd, v});
                } else {
                    res.parent_arc[v] = a; // deterministic tie-break
                }
            }
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Max-flow (Dinic) with exact infinite capacities.

namespace {

struct Residual {
    const FlowNetwork& net;
    std::vector<long long>& flow;

    Cap forward_resid(int a) const {
        const Arc& arc = net.arcs[a];
        if (arc.capacity.is_inf()) return Cap::infinite();
        return Cap::finite(arc.capacity.finite_value() - flow[a]);
    }
    long long backward_resid(int a) const { return flow[a]; }
};

} // namespace

MaxFlowResult max_flow_min_cut(const FlowNetwork& net) {
    MaxFlowResult res;
    res.flow.value.assign(net.arcs.size(), 0);
    if (has_all_infinite_path(net)) {
        res.amount = Cap::infinite();
        return res;
    }

    Residual r{net, res.flow.value};
    auto out = out_arcs(net);
    auto in = in_arcs(net);
    long long total = 0;

    std::vector<int> level(net.node_count);
    std::vector<size_t> it_out(net.node_count), it_in(net.node_count);

    auto bfs = [&]() {
        std::fill(level.begin(), level.end(), -1);
        std::deque<int> queue{net.source};
        level[net.source] = 0;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int a : out[u]) {
                int v = net.arcs[a].head;
                Cap c = r.forward_resid(a);
                if (level[v] < 0 && (c.is_inf() || c.finite_value() > 0)) {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
            for (int a : in[u]) {
                int v = net.arcs[a].tail;
                if (level[v] < 0 && r.backward_resid(a) > 0) {
                    level[v] = level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        return level[net.sink] >= 0;
    };

    // Blocking-flow DFS; pushed amounts are always finite because an
    // augmenting path made of infinite arcs alone was excluded above.
    std::function<long long(int, long long)> dfs = [&](int u, long long limit) -> long long {
        if (u == net.sink) return limit;
        for (size_t& i = it_out[u]; i < out[u].size(); ++i) {
            int a = out[u][i];
            int v = net.arcs[a].head;
            Cap c = r.forward_resid(a);
            if (level[v] != level[u] + 1 || (!c.is_inf() && c.finite_value() <= 0)) continue;
            long long cap_here = c.is_inf() ? limit : std::min(limit, c.finite_value());
            long long got = dfs(v, cap_here);
            if (got > 0) {
                res.flow.value[a] += got;
                return got;
            }
        }
        for (size_t& i = it_in[u]; i < in[u].size(); ++i) {
            int a = in[u][i];
            int v = net.arcs[a].tail;
            if (level[v] != level[u] + 1 || r.backward_resid(a) <= 0) continue;
            long long got = dfs(v, std::min(limit, r.backward_resid(a)));
            if (got > 0) {
                res.flow.value[a] -= got;
                return got;
            }
        }
        level[u] = -1;
        return 0;
    };

    const long long kBig = (1LL << 62);
    while (bfs()) {
        std::fill(it_out.begin(), it_out.end(), 0);
        std::fill(it_in.begin(), it_in.end(), 0);
        long long pushed;
        while ((pushed = dfs(net.source, kBig)) > 0) total += pushed;
    }

    res.amount = Cap::finite(total);
    // Smallest minimizer out-shore: residual reachability from the source.
    std::vector<char> seen(net.node_count, 0);
    std::deque<int> queue{net.source};
    seen[net.source] = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int a : out[u]) {
            int v = net.arcs[a].head;
            Cap c = r.forward_resid(a);
            if (!seen[v] && (c.is_inf() || c.finite_value() > 0)) {
                seen[v] = 1;
                queue.push_back(v);
            }
        }
        for (int a : in[u]) {
            int v = net.arcs[a].tail;
            if (!seen[v] && r.backward_resid(a) > 0) {
                seen[v] = 1;
                queue.push_back(v);
            }
        }
    }
    for (int v = 0; v < net.node_count; ++v)
        if (seen[v]) res.min_shore.insert(v);
    return res;
}

// ---------------------------------------------------------------------------
// (0,1)-cost min-cost flow by alternating potential/flow phases.

namespace {

struct UnitCostState {
    const FlowNetwork& net;
    std::vector<long long> z;
    std::vector<long long> pi;
    std::vector<std::vector<int>> out, in;

    explicit UnitCostState(const FlowNetwork& n)
        : net(n), z(n.arcs.size(), 0), pi(n.node_count, 0), out(out_arcs(n)), in(in_arcs(n)) {}

    long long drop(int a) const { return pi[net.arcs[a].head] - pi[net.arcs[a].tail]; }
    bool tight(int a) const { return drop(a) == net.arcs[a].cost; }
    bool forward_open(int a) const {
        const Arc& arc = net.arcs[a];
        return arc.capacity.is_inf() || z[a] < arc.capacity.finite_value();
    }

    // Nodes reachable from the source along tight residual arcs.
    std::vector<char> tight_reachable() const {
        std::vector<char> seen(net.node_count, 0);
        std::deque<int> queue{net.source};
        seen[net.source] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int a : out[u]) {
                int v = net.arcs[a].head;
                if (!seen[v] && tight(a) && forward_open(a)) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
            }
            for (int a : in[u]) {
                int v = net.arcs[a].tail;
                if (!seen[v] && tight(a) && z[a] > 0) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        return seen;
    }

    // True iff the sink is tight-reachable using infinite-capacity forward
    // arcs only (an unbounded augmenting direction).
    bool infinite_tight_path() const {
        std::vector<char> seen(net.node_count, 0);
        std::deque<int> queue{net.source};
        seen[net.source] = 1;
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            if (u == net.sink) return true;
            for (int a : out[u]) {
                int v = net.arcs[a].head;
                if (!seen[v] && tight(a) && net.arcs[a].capacity.is_inf()) {
                    seen[v] = 1;
                    queue.push_back(v);
                }
            }
        }
        return seen[net.sink];
    }

    // One BFS augmentation over tight residual arcs. Returns pushed amount.
    long long augment_once() {
        std::vector<int> how(net.node_count, 0);  // +a+1 forward, -a-1 backward
        std::vector<int> prev(net.node_count, -1);
        std::deque<int> queue{net.source};
        std::vector<char> seen(net.node_count, 0);
        seen[net.source] = 1;
        while (!queue.empty() && !seen[net.sink]) {
            int u = queue.front();
            queue.pop_front();
            for (int a : out[u]) {
                int v = net.arcs[a].head;
                if (!seen[v] && tight(a) && forward_open(a) &&
                    !net.arcs[a].capacity.is_inf()) {
                    seen[v] = 1;
                    prev[v] = u;
                    how[v] = a + 1;
                    queue.push_back(v);
                }
            }
            for (int a : out[u]) { // infinite forward arcs second, for determinism
                int v = net.arcs[a].head;
                if (!seen[v] && tight(a) && net.arcs[a].capacity.is_inf()) {
                    seen[v] = 1;
                    prev[v] = u;
                    how[v] = a + 1;
                    queue.push_back(v);
                }
            }
            for (int a : in[u]) {
                int v = net.arcs[a].tail;
                if (!seen[v] && tight(a) && z[a] > 0) {
                    seen[v] = 1;
                    prev[v] = u;
                    how[v] = -a - 1;
                    queue.push_back(v);
                }
            }
        }
        if (!seen[net.sink]) return 0;

        long long bottleneck = -1;
        for (int v = net.sink; v != net.source; v = prev[v]) {
            int h = how[v];
            long long room;
            if (h > 0) {
                const Arc& arc = net.arcs[h - 1];
                if (arc.capacity.is_inf()) continue;
                room = arc.capacity.finite_value() - z[h - 1];
            } else {
                room = z[-h - 1];
            }
            bottleneck = bottleneck < 0 ? room : std::min(bottleneck, room);
        }
        if (bottleneck <= 0) return 0; // all-infinite path; caller handles it
        for (int v = net.sink; v != net.source; v = prev[v]) {
            int h = how[v];
            if (h > 0)
                z[h - 1] += bottleneck;
            else
                z[-h - 1] -= bottleneck;
        }
        return bottleneck;
    }
};

} // namespace

UnitCostFlowResult min_cost_flow_unit_costs(const FlowNetwork& net, long long target) {
    if (target < 1) fail_contract("target potential must be positive");
    for (const Arc& a : net.arcs)
        if (a.cost != 0 && a.cost != 1) fail_contract("unit-cost solver requires {0,1} costs");

    UnitCostState st(net);
    for (;;) {
        // Flow-augmenting phase within the tight subnetwork.
        if (st.infinite_tight_path()) {
            if (st.pi[net.sink] < target)
                fail_infeasible("potential at the sink cannot reach the target");
            break; // value-neutral unbounded direction at the final level
        }
        while (st.augment_once() > 0) {
        }
        if (st.pi[net.sink] == target) break;
        // Potential-augmenting phase: +1 on everything the tight residual
        // digraph cannot reach from the source. This preserves (F1)/(F2).
        std::vector<char> reach = st.tight_reachable();
        if (reach[net.sink]) fail_infeasible("potential at the sink cannot reach the target");
        for (int v = 0; v < net.node_count; ++v)
            if (!reach[v]) st.pi[v] += 1;
    }

    UnitCostFlowResult res;
    res.flow.value = std::move(st.z);
    res.potential.value = std::move(st.pi);
    res.amount = res.flow.amount(net);
    return res;
}

// ---------------------------------------------------------------------------
// Maximum b-matching via one max-flow, with a forest post-pass.

BMatchingResult b_matching_max(const BipartiteGraph& g, const std::vector<long long>& b_left,
                               const std::vector<long long>& b_right) {
    if (static_cast<int>(b_left.size()) != g.left_count ||
        static_cast<int>(b_right.size()) != g.right_count)
        fail_input("b vector sizes do not match the graph");
    for (long long b : b_left)
        if (b < 0) fail_input("negative b value");
    for (long long b : b_right)
        if (b < 0) fail_input("negative b value");

    FlowNetwork net;
    net.node_count = g.left_count + g.right_count + 2;
    net.source = g.left_count + g.right_count;
    net.sink = net.source + 1;
    for (int i = 0; i < g.left_count; ++i) net.add_arc(net.source, i, Cap::finite(b_left[i]));
    std::vector<int> edge_arc;
    for (auto [l, rgt] : g.edges)
        edge_arc.push_back(net.add_arc(l, g.left_count + rgt, Cap::infinite()));
    for (int j = 0; j < g.right_count; ++j)
        net.add_arc(g.left_count + j, net.sink, Cap::finite(b_right[j]));

    MaxFlowResult mf = max_flow_min_cut(net);
    BMatchingResult res;
    res.total = mf.amount.finite_value();
    res.z.resize(g.edges.size());
    for (size_t i = 0; i < g.edges.size(); ++i) res.z[i] = mf.flow.value[edge_arc[i]];

    // Cycle-cancelling pass: alternate +/- around any all-positive cycle so
    // the positive edges form a forest.
    auto find_cycle = [&]() -> std::vector<int> {
        int nodes = g.left_count + g.right_count;
        std::vector<std::vector<std::pair<int, int>>> adj(nodes); // (other node, edge idx)
        for (size_t i = 0; i < g.edges.size(); ++i) {
            if (res.z[i] <= 0) continue;
            int l = g.edges[i].first, rgt = g.left_count + g.edges[i].second;
            adj[l].push_back({rgt, static_cast<int>(i)});
            adj[rgt].push_back({l, static_cast<int>(i)});
        }
        std::vector<int> parent_edge(nodes, -2), parent(nodes, -1);
        for (int root = 0; root < nodes; ++root) {
            if (parent_edge[root] != -2) continue;
            std::deque<int> stack{root};
            parent_edge[root] = -1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (auto [v, e] : adj[u]) {
                    if (e == parent_edge[u]) continue;
                    if (parent_edge[v] == -2) {
                        parent_edge[v] = e;
                        parent[v] = u;
                        stack.push_back(v);
                    } else {
                        // Found a cycle through u-v; list its edges in
                        // cyclic adjacency order so +/- alternation works.
                        std::vector<char> on_u_path(nodes, 0);
                        for (int x = u; x != -1; x = parent[x]) on_u_path[x] = 1;
                        int meet = v;
                        while (!on_u_path[meet]) meet = parent[meet];
                        std::vector<int> cyc{e};
                        for (int x = v; x != meet; x = parent[x]) cyc.push_back(parent_edge[x]);
                        std::vector<int> up;
                        for (int x = u; x != meet; x = parent[x]) up.push_back(parent_edge[x]);
                        cyc.insert(cyc.end(), up.rbegin(), up.rend());
                        return cyc;
                    }
                }
            }
        }
        return {};
    };

    for (;;) {
        std::vector<int> cyc = find_cycle();
        if (cyc.empty()) break;
        long long alpha = res.z[cyc[0]];
        size_t arg = 0;
        for (size_t i = 0; i < cyc.size(); ++i)
            if (res.z[cyc[i]] < alpha) alpha = res.z[cyc[i]], arg = i;
        for (size_t i = 0; i < cyc.size(); ++i) {
            if ((i % 2) == (arg % 2))
                res.z[cyc[i]] -= alpha;
            else
                res.z[cyc[i]] += alpha;
        }
    }

    // Cover from the smallest min-cut shore: uncut left nodes and cut right
    // nodes; every edge arc is infinite so it cannot cross the cut.
    for (int i = 0; i < g.left_count; ++i)
        if (!mf.min_shore.count(i)) res.cover.push_back(i);
    for (int j = 0; j < g.right_count; ++j)
        if (mf.min_shore.count(g.left_count + j)) res.cover.push_back(g.left_count + j);
    return res;
}

std::vector<PathFlow> decompose_into_path_flows(const FlowNetwork& net, const Flow& z) {
    check_conservation(net, z);
    std::vector<long long> rest = z.value;
    auto adj = out_arcs(net);
    std::vector<PathFlow> paths;

    auto next_positive = [&](int u) -> int {
        for (int a : adj[u])
            if (rest[a] > 0) return a;
        return -1;
    };

    for (;;) {
        int first = next_positive(net.source);
        if (first < 0) break;
        std::vector<int> walk;
        std::vector<int> where(net.node_count, -1);
        int u = net.source;
        where[u] = 0;
        bool reached = false;
        while (true) {
            int a = next_positive(u);
            if (a < 0) fail_input("flow is not decomposable into s-t paths");
            walk.push_back(a);
            u = net.arcs[a].head;
            if (u == net.sink) {
                reached = true;
                break;
            }
            if (where[u] >= 0) break; // closed a cycle
            where[u] = static_cast<int>(walk.size());
        }
        if (!reached) fail_input("flow contains a circulation");
        long long mult = rest[walk[0]];
        for (int a : walk) mult = std::min(mult, rest[a]);
        for (int a : walk) rest[a] -= mult;
        paths.push_back(PathFlow{walk, mult});
    }
    for (long long v : rest)
        if (v != 0) fail_input("flow contains a circulation");
    return paths;
}

} // namespace smopt
