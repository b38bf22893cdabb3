#pragma once

#include <stdexcept>
#include <string>

namespace boxlat {

enum class errc {
    not_a_poset,
    not_a_lattice,
    size_cap_exceeded,
    unknown_name,
    arity_too_large,
    not_comparable,
    not_injective,
    not_one_sensitive,
    not_zero_preserving,
    not_defined,
    not_confined,
    not_bijective,
    not_simple,
    generator_overflow,
    precondition_not_met,
    syntax_error,
    unknown_operator,
    arity_mismatch,
    io_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_a_poset: return "NotAPoset";
        case errc::not_a_lattice: return "NotALattice";
        case errc::size_cap_exceeded: return "SizeCapExceeded";
        case errc::unknown_name: return "UnknownName";
        case errc::arity_too_large: return "ArityTooLarge";
        case errc::not_comparable: return "NotComparable";
        case errc::not_injective: return "NotInjective";
        case errc::not_one_sensitive: return "NotOneSensitive";
        case errc::not_zero_preserving: return "NotZeroPreserving";
        case errc::not_defined: return "NotDefined";
        case errc::not_confined: return "NotConfined";
        case errc::not_bijective: return "NotBijective";
        case errc::not_simple: return "NotSimple";
        case errc::generator_overflow: return "GeneratorOverflow";
        case errc::precondition_not_met: return "PreconditionNotMet";
        case errc::syntax_error: return "SyntaxError";
        case errc::unknown_operator: return "UnknownOperator";
        case errc::arity_mismatch: return "ArityMismatch";
        case errc::io_error: return "IoError";
    }
    return "?";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
          code_(code),
          detail_(detail) {}
    errc code() const { return code_; }
    const std::string& detail() const { return detail_; }

private:
    errc code_;
    std::string detail_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace boxlat
