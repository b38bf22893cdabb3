#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "boxlat/lattice.hpp"

namespace boxlat {

// AST for construction expressions:
//   expr := atom | op '(' expr {',' expr} ')'
// Atoms are catalog names, integers (as arguments of chain/boolean/fd), or
// file paths. Operators: box, ltp, tensor, dual, prod, con, m3, n5,
// m3angle, n5angle.
struct ConstructionExpr {
    enum class Kind { atom, call };
    Kind kind = Kind::atom;
    std::string name;
    std::vector<ConstructionExpr> args;
    int offset = 0;

    std::string print() const;
};

ConstructionExpr parse_expr(const std::string& text);

// Bottom-up evaluation with memoization keyed by the printed canonical form.
class Evaluator {
public:
    std::shared_ptr<const FiniteLattice> evaluate(const ConstructionExpr& e);
    std::shared_ptr<const FiniteLattice> evaluate(const std::string& text);

private:
    std::map<std::string, std::shared_ptr<const FiniteLattice>> memo_;
};

}  // namespace boxlat
