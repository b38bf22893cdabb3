#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "boxlat/bits.hpp"
#include "boxlat/lattice.hpp"

namespace boxlat {

// Shared context for subsets of A x B: cell indexing plus the three basic
// set families. Cell (a, b) has index a*|B| + b.
//   box(a,b)    = {(x,y) : x <= a or  y <= b}
//   circ(a,b)   = {(x,y) : x <= a and y <= b}
//   tensor(a,b) = circ(a,b) ∪ bottom
// where bottom = (A x {0_B}) ∪ ({0_A} x B).
struct Grid {
    const FiniteLattice* A = nullptr;
    const FiniteLattice* B = nullptr;
    int na = 0, nb = 0, cells = 0;
    std::vector<Bits> boxes, circs, tensors;
    std::vector<Bits> upboxes;  // {(x,y) : a <= x or b <= y}, the dual-order boxes
    Bits bottom, full;

    Grid() = default;
    Grid(const FiniteLattice& a, const FiniteLattice& b);

    int idx(int a, int b) const { return a * nb + b; }
    std::pair<int, int> unidx(int i) const { return {i / nb, i % nb}; }

    const Bits& pure_box(int a, int b) const { return boxes[idx(a, b)]; }
    const Bits& pure_circ(int a, int b) const { return circs[idx(a, b)]; }
    const Bits& pure_tensor(int a, int b) const { return tensors[idx(a, b)]; }

    bool is_bi_ideal(const Bits& h) const;
    // Least bi-ideal containing x: fixpoint of bottom/hereditary/joins.
    Bits bi_ideal_closure(Bits x) const;

    // Maximal cells of a hereditary set, sorted by cell index.
    std::vector<std::pair<int, int>> maximal_pairs(const Bits& h) const;
    // H equals the union of pure tensors of its maximal pairs.
    bool is_capped_element(const Bits& h) const;

    // (a0 ⊗ b0) ∪ (a1 ⊗ b1) for comparably crossed arguments.
    Bits mixed_tensor(int a0, int b0, int a1, int b1) const;
    std::vector<Bits> all_mixed_tensors() const;

    std::string pair_list(const Bits& h) const;  // "(x,y)(x,y)..." in index order
};

// The semilattice tensor product of two finite lattices with zero: every
// bi-ideal of A x B, generated as the join closure of the pure tensors.
struct TensorLattice {
    Grid grid;
    FiniteLattice lat;
    std::vector<Bits> elems;  // indexed like lat, sorted by (count, words)
    std::unordered_map<Bits, int, BitsHash> index;

    int index_of(const Bits& h) const {
        auto it = index.find(h);
        return it == index.end() ? -1 : it->second;
    }
    int join_elems(int x, int y) const { return lat.join(x, y); }
};

TensorLattice tensor_product(const FiniteLattice& a, const FiniteLattice& b);

// Independent oracle: enumerate every bi-ideal directly (grids <= 36 cells)
// as an antitone column assignment of ideals with join-closed rows.
std::vector<Bits> all_bi_ideals_bruteforce(const Grid& g);

// Sub-tensor-product conditions for a family C of bi-ideals:
// (i) closed under intersection, (ii) a lattice under containment,
// (iii) contains every mixed tensor.
bool is_sub_tensor_product(const Grid& g, const std::vector<Bits>& c, std::string* why = nullptr);
bool is_capped(const TensorLattice& t);

// Exhaustive search for all sub-tensor products inside A ⊗ B (small grids).
std::vector<std::vector<Bits>> all_sub_tensor_products(const TensorLattice& t);

// A validated {∨,0}-homomorphism between two lattices.
struct JoinHom {
    const FiniteLattice* source = nullptr;
    const FiniteLattice* target = nullptr;
    std::vector<int> map;

    JoinHom() = default;
    JoinHom(const FiniteLattice& src, const FiniteLattice& tgt, std::vector<int> m);
    int operator()(int x) const { return map[x]; }
};

// The tensor functor on morphisms: H maps to the bi-ideal closure of the
// pointwise image of H under (f, g). Requires zero-preserving f and g.
JoinHom tensor_product_hom(const TensorLattice& s, const TensorLattice& t, const LatticeHom& f,
                           const LatticeHom& g);

}  // namespace boxlat
