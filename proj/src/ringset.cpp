#include "smopt/ringset.hpp"

#include <algorithm>
#include <deque>

#include "smopt/error.hpp"

namespace smopt {

RingCode::RingCode(int ground_size, int source, int sink, std::vector<std::set<int>> code)
    : source_(source), sink_(sink), code_(std::move(code)) {
    if (static_cast<int>(code_.size()) != ground_size)
        fail_contract("ring code size does not match ground size");
    if (source_ < 0 || source_ >= ground_size || sink_ < 0 || sink_ >= ground_size ||
        source_ == sink_)
        fail_contract("bad source/sink in ring code");
}

bool RingCode::is_member(const std::set<int>& z) const {
    if (z.empty()) return true;
    if (static_cast<int>(z.size()) == ground_size()) return true;
    if (!z.count(source_) || z.count(sink_)) return false;
    for (int u : z)
        for (int v : code_[u])
            if (!z.count(v)) return false;
    return true;
}

std::vector<std::pair<int, int>> RingCode::code_arcs() const {
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < ground_size(); ++u)
        for (int v : code_[u])
            if (v != u) arcs.emplace_back(u, v);
    return arcs;
}

std::optional<std::set<int>> RingCode::smallest_member_containing(const std::set<int>& seed) const {
    std::set<int> closure;
    std::deque<int> queue(seed.begin(), seed.end());
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (!closure.insert(u).second) continue;
        for (int v : code_[u])
            if (!closure.count(v)) queue.push_back(v);
    }
    if (closure.count(sink_)) return std::nullopt;
    return closure;
}

std::vector<std::set<int>> RingCode::enumerate_members(std::size_t cap) const {
    std::set<std::set<int>> members;
    members.insert(std::set<int>{});
    std::set<int> full;
    for (int u = 0; u < ground_size(); ++u) full.insert(u);
    members.insert(full);

    std::deque<std::set<int>> queue;
    auto base = smallest_member_containing({source_});
    if (base) {
        members.insert(*base);
        queue.push_back(*base);
    }
    while (!queue.empty()) {
        std::set<int> z = queue.front();
        queue.pop_front();
        for (int v = 0; v < ground_size(); ++v) {
            if (v == sink_ || z.count(v)) continue;
            std::set<int> seed = z;
            seed.insert(v);
            auto grown = smallest_member_containing(seed);
            if (!grown) continue;
            if (members.insert(*grown).second) {
                if (members.size() > cap) fail_resource("ring member enumeration exceeded cap");
                queue.push_back(*grown);
            }
        }
    }
    return {members.begin(), members.end()};
}

void validate_ring_code(const RingCode& rc) {
    for (int u = 0; u < rc.ground_size(); ++u) {
        const std::set<int>& cu = rc.code_of(u);
        if (!cu.count(u)) fail_contract("code violates u in C(u)");
        for (int v : cu) {
            const std::set<int>& cv = rc.code_of(v);
            if (!std::includes(cu.begin(), cu.end(), cv.begin(), cv.end()))
                fail_contract("code violates closure: C(v) not within C(u)");
        }
        if (u != rc.sink() && !cu.count(rc.source()))
            fail_contract("code of a non-sink node misses the source");
    }
    if (static_cast<int>(rc.code_of(rc.sink()).size()) != rc.ground_size())
        fail_contract("code of the sink must be the full ground set");
}

} // namespace smopt
