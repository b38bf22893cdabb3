#pragma once

#include <string>
#include <vector>

#include "boxlat/bits.hpp"
#include "boxlat/lattice.hpp"

namespace boxlat {

// An element of the free distributive lattice on `arity` generators,
// realized as an upper subset of the powerset of {0..arity-1} that excludes
// the empty set and contains the full set. Bit s of `members` stands for the
// subset of generators with mask s.
struct UpperSet {
    int arity = 0;
    Bits members;

    UpperSet() = default;
    UpperSet(int arity_, Bits members_);  // validates the invariants

    bool contains(unsigned mask) const { return members.test(int(mask)); }
    std::vector<unsigned> minimal_sets() const;
    std::string to_string() const;  // minimal sets joined by '|', e.g. "02|1"

    bool operator==(const UpperSet& o) const { return arity == o.arity && members == o.members; }
};

// The complement-dual involution: X is kept iff the complement of X is absent.
UpperSet star(const UpperSet& c);

// Meet over all sets X in c of the join of args[i], i in X.
int eval_polynomial(const UpperSet& c, const std::vector<int>& args, const FiniteLattice& l);

struct FreeDistributive {
    FiniteLattice lat;
    std::vector<UpperSet> elems;     // indexed like lat
    std::vector<int> generator_idx;  // generator_idx[i] = index of the i-th generator
};

// All of F_D(n) ordered by inclusion; n <= 4.
FreeDistributive free_distributive(int n);

}  // namespace boxlat
