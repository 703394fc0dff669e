#ifndef SMOPT_ORACLE_HPP
#define SMOPT_ORACLE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "smopt/core.hpp"

namespace smopt {

struct Fixture {
    std::string name;
    PreferenceSystem system;
};

// I1: one boy, one girl, one edge.
Fixture fixture_i1();
// I2: 2x2 with opposed preferences; stable matchings MB and MG.
Fixture fixture_i2();
// I3: cyclic 3x3; stable matchings M0, M1, M2.
Fixture fixture_i3();

// Exhaustive ground truth: every matching that passes the definitional
// stability check, found by lexicographic backtracking with its own
// domination bookkeeping (independent of the library's solvers).
std::vector<Matching> enumerate_stable(const PreferenceSystem& sys, int node_bound = 8);

// Minimum h-value of an edge set meeting every member of `family`,
// by complete branch-and-bound on uncovered members.
long long brute_min_blocker(const PreferenceSystem& sys, const std::vector<Matching>& family,
                            const std::map<EdgeId, long long>& h);

// Maximum w-weight of the union of ell members (repetition allowed).
long long brute_max_union(const std::vector<Matching>& family, int ell,
                          const std::map<EdgeId, long long>& w);

// Lexicographically minimal level-count vector over the family.
std::vector<long long> brute_lex_fair(const PreferenceSystem& sys,
                                      const std::vector<Matching>& family,
                                      const std::map<NodeId, std::map<EdgeId, int>>& levels,
                                      int level_cap);

// Maximum w-weight antichain of an explicit strict order (exhaustive).
long long brute_max_antichain(const std::vector<std::string>& elements,
                              const std::set<std::pair<std::string, std::string>>& less_than,
                              const std::map<std::string, long long>& w);

// Seed-deterministic random instance with uniformly shuffled strict lists.
PreferenceSystem random_instance(int n_boys, int n_girls, double edge_density,
                                 unsigned long seed);

} // namespace smopt

#endif
