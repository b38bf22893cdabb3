#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "boxlat/bits.hpp"
#include "boxlat/config.hpp"
#include "boxlat/error.hpp"

namespace boxlat {

// A finite lattice over dense element indices 0..n-1. The order relation is
// kept as one bitset row per element in both directions; meet and join are
// total n*n tables validated at construction time. Every instance is
// immutable after construction and safe to share across threads.
struct FiniteLattice {
    std::string name;
    int n = 0;
    std::vector<std::string> labels;
    std::vector<Bits> up;    // up[x] = {y : x <= y}
    std::vector<Bits> down;  // down[x] = {y : y <= x}
    std::vector<int> meet_tab, join_tab;
    std::vector<int> height_of;  // longest chain from the bottom
    int zero = -1, one = -1;

    bool leq(int x, int y) const { return up[x].test(y); }
    bool lt(int x, int y) const { return x != y && leq(x, y); }
    int meet(int x, int y) const { return meet_tab[size_t(x) * n + y]; }
    int join(int x, int y) const { return join_tab[size_t(x) * n + y]; }

    // Meet/join over an index list; empty meet is 1, empty join is 0.
    int meet_all(const std::vector<int>& xs) const;
    int join_all(const std::vector<int>& xs) const;

    const std::string& label(int x) const { return labels[x]; }
    int index_of(const std::string& label) const;  // -1 if absent
    int height() const { return height_of[one]; }

    // Cover pairs (x, y) with y covering x, in index order.
    std::vector<std::pair<int, int>> covers() const;
};

// Build from an explicit order predicate. The predicate must be a partial
// order on 0..n-1; meets and joins must exist for every pair.
FiniteLattice lattice_from_order(std::string name, std::vector<std::string> labels,
                                 const std::function<bool(int, int)>& leq);

// Build from a cover list (lower, upper). Errors: NotAPoset on a cycle,
// NotALattice when some pair has no unique meet/join.
FiniteLattice lattice_from_covers(std::string name, std::vector<std::string> labels,
                                  const std::vector<std::pair<int, int>>& covers);
FiniteLattice lattice_from_covers(std::string name, const std::vector<std::string>& labels,
                                  const std::vector<std::pair<std::string, std::string>>& covers);

// Named stock lattices: chain(k), M3, N5, boolean(k), FD(k).
FiniteLattice catalog(const std::string& name);

FiniteLattice dual(const FiniteLattice& l);
FiniteLattice direct_product(const FiniteLattice& a, const FiniteLattice& b);

// Induced sublattice on `elems` (must be closed under meet and join).
// Returns the lattice and the inclusion map into `l`.
std::pair<FiniteLattice, std::vector<int>> sublattice(const FiniteLattice& l,
                                                      std::vector<int> elems,
                                                      std::string name = "");

bool is_distributive(const FiniteLattice& l);

// Backtracking search for a lattice isomorphism, pruned by element
// signatures (height, ideal/filter size, cover degrees).
std::optional<std::vector<int>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b);

// A validated lattice homomorphism.
struct LatticeHom {
    const FiniteLattice* source = nullptr;
    const FiniteLattice* target = nullptr;
    std::vector<int> map;
    bool preserves_zero = false;
    bool preserves_one = false;
    bool injective = false;

    LatticeHom() = default;
    LatticeHom(const FiniteLattice& src, const FiniteLattice& tgt, std::vector<int> m);

    int operator()(int x) const { return map[x]; }
};

LatticeHom identity_hom(const FiniteLattice& l);
LatticeHom compose(const LatticeHom& g, const LatticeHom& f);  // g after f

// True iff f maps the top of its source onto the top of its target. Every
// lattice here is finite, so the existence half of the condition is automatic.
bool is_one_sensitive(const LatticeHom& f);

void check_size_cap(long long n, const std::string& what);

}  // namespace boxlat
