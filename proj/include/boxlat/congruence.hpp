#pragma once

#include <string>
#include <vector>

#include "boxlat/lattice.hpp"

namespace boxlat {

// A congruence of a finite lattice as a canonical partition: block ids are
// assigned in order of each block's least member, so equal congruences have
// equal `block_of` vectors.
struct Congruence {
    const FiniteLattice* lat = nullptr;
    std::vector<int> block_of;
    int block_count = 0;

    Congruence() = default;
    Congruence(const FiniteLattice& l, std::vector<int> raw_block_ids);

    bool same(int x, int y) const { return block_of[x] == block_of[y]; }
    bool is_identity() const { return block_count == lat->n; }
    bool is_all() const { return block_count == 1; }
    // refinement order: *this <= other
    bool leq(const Congruence& other) const;
    std::vector<std::vector<int>> blocks() const;
    std::string to_string() const;

    bool operator==(const Congruence& o) const { return block_of == o.block_of; }
};

Congruence identity_congruence(const FiniteLattice& l);
Congruence all_congruence(const FiniteLattice& l);

// Least congruence collapsing every given pair: merge, then propagate
// x~y => x∧z ~ y∧z and x∨z ~ y∨z to a fixpoint.
Congruence congruence_closure(const FiniteLattice& l,
                              const std::vector<std::pair<int, int>>& pairs);
Congruence principal_congruence(const FiniteLattice& l, int a, int b);

Congruence cong_meet(const Congruence& a, const Congruence& b);
Congruence cong_join(const Congruence& a, const Congruence& b);

// Con L: all joins of principal congruences, ordered by refinement.
struct ConLattice {
    FiniteLattice lat;
    std::vector<Congruence> elems;  // indexed like lat

    int index_of(const Congruence& c) const;
};
ConLattice congruence_lattice(const FiniteLattice& l);

bool is_simple(const FiniteLattice& l);

// Pull a congruence back along an injective homomorphism embed: L -> M.
Congruence restrict_congruence(const Congruence& theta, const LatticeHom& embed);

// Independent oracle: filter all set partitions (|L| <= 8).
std::vector<Congruence> all_congruences_bruteforce(const FiniteLattice& l);

}  // namespace boxlat
