#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "boxlat/grid.hpp"

namespace boxlat {

// --- Galois machinery on a grid ------------------------------------------
// (x,y) lies below (v,w) in the box sense iff x <= v or y <= w.
// up(X)   = pairs above every member of X
// down(X) = pairs below every member of X = intersection of their boxes
Bits triangle_up(const Grid& g, const Bits& x);
Bits triangle_down(const Grid& g, const Bits& x);

// Three routes to the least box-product element containing a set.
Bits box_closure_galois(const Grid& g, const Bits& x);  // down(up(x))
Bits box_closure_oracle(const Grid& g, const Bits& x);  // scan of all covering boxes

// A finite union of pure boxes (at least one) and pure circs.
struct BoxDot {
    std::vector<std::pair<int, int>> box_terms;
    std::vector<std::pair<int, int>> circ_terms;

    Bits set_of(const Grid& g) const;
};
// Terms given as boxes/circs/tensors; tensor terms contribute their circ
// plus a (0,0) box term for the bottom.
BoxDot boxdot_from_terms(const Grid& g, const std::vector<std::pair<int, int>>& boxes,
                         const std::vector<std::pair<int, int>>& circs,
                         const std::vector<std::pair<int, int>>& tensors);

// The closed-formula route: with abar/bbar the joins of the box terms, the
// closure is the intersection over all subsets X of the circ terms of
//   (abar ∨ c_join(X)) box (bbar ∨ d_join(complement X)).
Bits box_closure_formula(const Grid& g, const BoxDot& h,
                         std::vector<std::pair<int, int>>* gens_out = nullptr);

// Decides ⋂ gens[i].box ⊆ a box b from generator arithmetic alone.
bool box_leq_criterion(const FiniteLattice& a_lat, const FiniteLattice& b_lat,
                       const std::vector<std::pair<int, int>>& gens, int a, int b);
// Mutual-inclusion equality of two generator lists via the criterion.
bool box_equal_criterion(const FiniteLattice& a_lat, const FiniteLattice& b_lat,
                         const std::vector<std::pair<int, int>>& gens1,
                         const std::vector<std::pair<int, int>>& gens2);

// --- The box product as an enumerated lattice -----------------------------
struct BoxProduct {
    Grid grid;
    FiniteLattice lat;
    std::vector<Bits> elems;
    std::vector<std::vector<std::pair<int, int>>> gens;  // canonical, irredundant
    std::unordered_map<Bits, int, BitsHash> index;

    int index_of(const Bits& h) const {
        auto it = index.find(h);
        return it == index.end() ? -1 : it->second;
    }
    std::string describe(int i) const;  // generator list + cardinality
};

// All finite intersections of pure boxes, closed under pairwise intersection.
BoxProduct box_product(const FiniteLattice& a, const FiniteLattice& b);
// The confined elements of the box product (all of them, for bounded inputs).
BoxProduct lattice_tensor_product(const FiniteLattice& a, const FiniteLattice& b);

// Smallest irredundant generator list: minimal pairs of up(h), then greedy
// removal of redundant boxes.
std::vector<std::pair<int, int>> canonical_generators(const Grid& g, const Bits& h);

// --- Existence of the lattice tensor product ------------------------------
struct BoundMask {
    bool has_zero = true;
    bool has_unit = true;
};
struct LtpExistence {
    bool defined = false;
    bool both_zero = false, both_unit = false, a_bounded = false, b_bounded = false;

    std::string reason() const;
};
LtpExistence ltp_defined(BoundMask a, BoundMask b);
LtpExistence ltp_defined(const FiniteLattice& a, const FiniteLattice& b);

// --- Joins ------------------------------------------------------------------
// Join of two generator lists through the U/V polynomial families; throws
// GeneratorOverflow when 2^m + 2^n - 4 exceeds the configured cap.
Bits box_join_polynomial(const Grid& g, const std::vector<std::pair<int, int>>& gens_h,
                         const std::vector<std::pair<int, int>>& gens_k,
                         std::vector<std::pair<int, int>>* gens_out = nullptr);
// Production join: polynomial route within the cap, closure of the union
// beyond it (provably the same element).
Bits box_join(const Grid& g, const std::vector<std::pair<int, int>>& gens_h,
              const std::vector<std::pair<int, int>>& gens_k);

// --- Structure maps --------------------------------------------------------
// Pure lattice tensors u ⊗ v with h = union of them (zero case).
std::vector<std::pair<int, int>> join_basis_decomposition(const Grid& g, const Bits& h);
// Canonical generators extended so the coordinatewise meets are both zero.
std::vector<std::pair<int, int>> normalized_generators(const Grid& g, const Bits& h);

// Order-reversing bijection from the box product of the duals onto the
// lattice tensor product, sending each dual pure box of (a,b) to a tensor b.
std::vector<int> duality_map(const BoxProduct& dual_box, const BoxProduct& ltp);

// Functorial action on box products; f and g must be one-sensitive.
LatticeHom hom_box(const BoxProduct& src, const BoxProduct& dst, const LatticeHom& f,
                   const LatticeHom& g);
// Functorial action on lattice tensor products; f and g must preserve zero.
LatticeHom hom_ltp(const BoxProduct& src, const BoxProduct& dst, const LatticeHom& f,
                   const LatticeHom& g);

// The retraction of the semilattice tensor product onto the lattice tensor
// product: box closure, fixing every element already in the image.
JoinHom retraction_rho(const TensorLattice& t, const BoxProduct& ltp);

}  // namespace boxlat
