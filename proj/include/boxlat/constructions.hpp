#pragma once

#include <array>
#include <string>
#include <vector>

#include "boxlat/boxprod.hpp"
#include "boxlat/congruence.hpp"
#include "boxlat/grid.hpp"

namespace boxlat {

enum class TripleKind { m3_square, n5_square, m3_angle, n5_angle };

// A sublattice of L^3 cut out by one of the four defining equations, with
// componentwise order. Joins are least members of the subset above both
// arguments; their existence is verified during construction.
struct TripleLattice {
    const FiniteLattice* base = nullptr;
    TripleKind kind{};
    std::vector<std::array<int, 3>> members;  // aligned with lat indices
    FiniteLattice lat;

    int index_of(const std::array<int, 3>& t) const;
    bool contains(const std::array<int, 3>& t) const { return index_of(t) >= 0; }
};

TripleLattice m3_of(const FiniteLattice& l);
TripleLattice n5_of(const FiniteLattice& l);
TripleLattice m3_angle(const FiniteLattice& l);
TripleLattice n5_angle(const FiniteLattice& l);

// The canonical isomorphism from the tensor product of the diamond (resp.
// pentagon) with L onto the triple lattice, determined by its images on pure
// tensors. Verified bijective; NotBijective otherwise.
std::vector<int> alpha_iso(const TensorLattice& t, const TripleLattice& triple);

struct EmbeddingReport {
    bool ok = false;
    std::string detail;
    int con_product = 0, con_base = 0;
};

// For simple bounded S: x maps to the box of (0_S, x) inside S ⊠ L. Checks
// that the map embeds L and that congruence restriction along it is a
// bijection Con(S ⊠ L) -> Con(L).
EmbeddingReport cong_preserving_embedding(const FiniteLattice& s, const FiniteLattice& l);

}  // namespace boxlat
