#include "boxlat/expr.hpp"

#include <cctype>

#include "boxlat/boxprod.hpp"
#include "boxlat/congruence.hpp"
#include "boxlat/constructions.hpp"
#include "boxlat/grid.hpp"
#include "boxlat/io.hpp"

namespace boxlat {

std::string ConstructionExpr::print() const {
    if (kind == Kind::atom) return name;
    std::string s = name + "(";
    for (size_t i = 0; i < args.size(); ++i) {
        if (i) s += ",";
        s += args[i].print();
    }
    return s + ")";
}

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && isspace((unsigned char)text[pos])) ++pos;
    }
    [[noreturn]] void syntax(const std::string& what) {
        fail(errc::syntax_error, what + " at offset " + std::to_string(pos));
    }

    static bool token_char(char c) {
        return isalnum((unsigned char)c) || c == '_' || c == '.' || c == '/' || c == '-';
    }

    std::string token() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && token_char(text[pos])) ++pos;
        if (pos == start) syntax("expected a name");
        return text.substr(start, pos - start);
    }

    ConstructionExpr expr() {
        skip_ws();
        int off = int(pos);
        std::string name = token();
        skip_ws();
        ConstructionExpr e;
        e.offset = off;
        if (pos < text.size() && text[pos] == '(') {
            ++pos;
            e.kind = ConstructionExpr::Kind::call;
            e.name = name;
            while (true) {
                e.args.push_back(expr());
                skip_ws();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (pos < text.size() && text[pos] == ')') {
                    ++pos;
                    break;
                }
                syntax("expected ',' or ')'");
            }
        } else {
            e.kind = ConstructionExpr::Kind::atom;
            e.name = name;
        }
        return e;
    }

    ConstructionExpr parse() {
        ConstructionExpr e = expr();
        skip_ws();
        if (pos != text.size()) syntax("trailing input");
        return e;
    }
};

int expect_arity(const ConstructionExpr& e, int arity) {
    if (int(e.args.size()) != arity)
        fail(errc::arity_mismatch, e.name + " expects " + std::to_string(arity) +
                                       " argument(s), got " + std::to_string(e.args.size()) +
                                       " at offset " + std::to_string(e.offset));
    return arity;
}

bool is_integer(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!isdigit((unsigned char)c)) return false;
    return true;
}

}  // namespace

ConstructionExpr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::shared_ptr<const FiniteLattice> Evaluator::evaluate(const ConstructionExpr& e) {
    std::string key = e.print();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    auto arg = [&](int i) { return evaluate(e.args[i]); };
    std::shared_ptr<const FiniteLattice> result;
    try {
        if (e.kind == ConstructionExpr::Kind::atom) {
            if (is_integer(e.name))
                fail(errc::syntax_error, "bare integer is not a lattice");
            if (e.name.find('/') != std::string::npos || e.name.find('.') != std::string::npos)
                result = std::make_shared<FiniteLattice>(load_lattice_file(e.name));
            else
                result = std::make_shared<FiniteLattice>(catalog(e.name));
        } else if (e.name == "chain" || e.name == "boolean" || e.name == "fd" || e.name == "FD") {
            expect_arity(e, 1);
            if (e.args[0].kind != ConstructionExpr::Kind::atom || !is_integer(e.args[0].name))
                fail(errc::arity_mismatch, e.name + " expects an integer argument");
            result = std::make_shared<FiniteLattice>(catalog(e.name + "(" + e.args[0].name + ")"));
        } else if (e.name == "dual") {
            expect_arity(e, 1);
            result = std::make_shared<FiniteLattice>(dual(*arg(0)));
        } else if (e.name == "prod") {
            expect_arity(e, 2);
            auto a = arg(0), b = arg(1);
            result = std::make_shared<FiniteLattice>(direct_product(*a, *b));
        } else if (e.name == "con") {
            expect_arity(e, 1);
            result = std::make_shared<FiniteLattice>(congruence_lattice(*arg(0)).lat);
        } else if (e.name == "box") {
            expect_arity(e, 2);
            auto a = arg(0), b = arg(1);
            result = std::make_shared<FiniteLattice>(box_product(*a, *b).lat);
        } else if (e.name == "ltp") {
            expect_arity(e, 2);
            auto a = arg(0), b = arg(1);
            result = std::make_shared<FiniteLattice>(lattice_tensor_product(*a, *b).lat);
        } else if (e.name == "tensor") {
            expect_arity(e, 2);
            auto a = arg(0), b = arg(1);
            result = std::make_shared<FiniteLattice>(tensor_product(*a, *b).lat);
        } else if (e.name == "m3") {
            expect_arity(e, 1);
            result = std::make_shared<FiniteLattice>(m3_of(*arg(0)).lat);
        } else if (e.name == "n5") {
            expect_arity(e, 1);
            result = std::make_shared<FiniteLattice>(n5_of(*arg(0)).lat);
        } else if (e.name == "m3angle") {
            expect_arity(e, 1);
            result = std::make_shared<FiniteLattice>(m3_angle(*arg(0)).lat);
        } else if (e.name == "n5angle") {
            expect_arity(e, 1);
            result = std::make_shared<FiniteLattice>(n5_angle(*arg(0)).lat);
        } else {
            fail(errc::unknown_operator,
                 "'" + e.name + "' at offset " + std::to_string(e.offset));
        }
    } catch (const error& err) {
        if (err.code() == errc::unknown_operator || err.code() == errc::arity_mismatch ||
            err.code() == errc::syntax_error)
            throw;
        fail(err.code(), err.detail() + " [in " + key + "]");
    }
    memo_[key] = result;
    return result;
}

std::shared_ptr<const FiniteLattice> Evaluator::evaluate(const std::string& text) {
    return evaluate(parse_expr(text));
}

}  // namespace boxlat
