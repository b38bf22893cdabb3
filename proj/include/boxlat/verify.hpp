#pragma once

#include <string>
#include <vector>

#include "boxlat/lattice.hpp"

namespace boxlat {

struct VerificationReport {
    std::string check;
    std::string subject;
    bool pass = false;
    std::string witness;  // nonempty on failure, independently re-checkable
    std::string stats;
    double seconds = 0;

    std::string line() const;
};

// Fundamental box/circ identities (a)-(e), exhaustively over all quadruples.
VerificationReport verify_identities(const FiniteLattice& a, const FiniteLattice& b);

// The three closure routes agree on every union of at most max_terms pure
// boxes/tensors, and land inside the enumerated box product.
VerificationReport verify_closure_agreement(const FiniteLattice& a, const FiniteLattice& b,
                                            int max_terms = 3);

// Polynomial join equals the enumerated least upper bound for all pairs of
// elements given by at most max_gens generators, plus seeded 3-generator
// samples.
VerificationReport verify_join_polynomials(const FiniteLattice& a, const FiniteLattice& b,
                                           int max_gens = 2, int samples3 = 32);

// The diamond/pentagon separations and the mixed equality.
VerificationReport verify_separations();

// Isomorphism theorems between Con A (x) Con B and the congruence lattice of
// the product, with the generator formula of each case.
VerificationReport verify_iso_zero(const FiniteLattice& a, const FiniteLattice& b);
VerificationReport verify_iso_bounded(const FiniteLattice& a, const FiniteLattice& b);
VerificationReport verify_iso_unit(const FiniteLattice& a, const FiniteLattice& b);

// The lattice tensor product is a capped sub-tensor product.
VerificationReport verify_capped(const FiniteLattice& a, const FiniteLattice& b);
// ... and is contained in every sub-tensor product (exhaustive search).
VerificationReport verify_minimality(const FiniteLattice& a, const FiniteLattice& b);

// Tensor and lattice tensor product coincide when a factor is distributive.
VerificationReport verify_distributive_collapse(const FiniteLattice& a, const FiniteLattice& b);

// Congruence-preserving embedding of L into S boxtimes L for simple S.
VerificationReport verify_embedding(const FiniteLattice& s, const FiniteLattice& l);

// Order-reversing duality between the box product of the duals and the
// lattice tensor product.
VerificationReport verify_duality(const FiniteLattice& a, const FiniteLattice& b);

// Conditions (i)-(iv) for maps A x B -> C given as a row-major cell table:
// zero annihilation, coordinatewise join preservation, and the paired
// polynomial inequality for arities up to max_poly_arity.
struct BimorphismConditions {
    BimorphismConditions(const FiniteLattice& a, const FiniteLattice& b, const FiniteLattice& c,
                         int max_poly_arity = 3);
    bool check(const std::vector<int>& table, std::string* why = nullptr) const;

    const FiniteLattice *a, *b, *c;

private:
    struct Instance {
        std::vector<int> av, bv;
        int pa, pb;
    };
    std::vector<Instance> instances_;
};

// Every zero-lattice bimorphism into C factors uniquely through the tensor.
VerificationReport verify_universal_bimorphism(const FiniteLattice& a, const FiniteLattice& b,
                                               const FiniteLattice& c);

// The full battery over catalog lattices of at most max_size elements.
std::vector<VerificationReport> verify_all(int max_size);

}  // namespace boxlat
