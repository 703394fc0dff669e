#ifndef SMOPT_RINGSET_HPP
#define SMOPT_RINGSET_HPP

#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace smopt {

/// A ring of sets over ground nodes 0..size-1, carried by its code
/// C(u) = smallest member containing u. Nontrivial members are
/// source-but-not-sink sets; the empty set and the full ground set are
/// always members.
class RingCode {
public:
    RingCode() = default;
    RingCode(int ground_size, int source, int sink, std::vector<std::set<int>> code);

    int ground_size() const { return static_cast<int>(code_.size()); }
    int source() const { return source_; }
    int sink() const { return sink_; }
    const std::set<int>& code_of(int u) const { return code_[u]; }

    bool is_member(const std::set<int>& z) const;

    // {(u,v) : v in C(u) - {u}}. A set is a member iff no code-arc leaves it.
    std::vector<std::pair<int, int>> code_arcs() const;

    // Reachability closure of seed in the code-digraph; nullopt when the
    // closure contains the sink (no member avoiding the sink exists).
    std::optional<std::set<int>> smallest_member_containing(const std::set<int>& seed) const;

    // Smallest nontrivial member, i.e. C(source).
    const std::set<int>& smallest_nontrivial() const { return code_[source_]; }

    // All members, as sorted sets, including the two trivial ones. Bails out
    // at the cap (members can be exponential); intended for oracle-size use.
    std::vector<std::set<int>> enumerate_members(std::size_t cap) const;

private:
    int source_ = 0;
    int sink_ = 0;
    std::vector<std::set<int>> code_;
};

// Checks the code axioms (u in C(u), closure, source/sink conventions) and
// throws ErrorKind::contract on violation.
void validate_ring_code(const RingCode& rc);

} // namespace smopt

#endif
