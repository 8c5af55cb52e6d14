#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperinv {

/// Error classes raised by the library. The CLI maps each class to an exit code.
enum class errc {
    domain_mismatch,      // operands from different coefficient domains
    invalid_argument,     // malformed input, wrong degree, bad bound
    undefined_resultant,  // resultant of a zero polynomial
    degenerate_curve,     // defining polynomial not squarefree
    degenerate_locus,     // a_1 = a_g = 0, dihedral invariants vanish
    not_in_locus,         // no extra involution found on the exact path
    not_normalizable,     // b0 = 0 after the shift
    precondition_failed,  // model family precondition violated
    degenerate_model,     // emitted model polynomial not squarefree
    invalid_root,         // root of unity of the wrong order
    numeric_failure,      // root finding did not converge
    invalid_comparison,   // genus mismatch
    not_applicable,       // operation undefined for this genus
    parse_error,
};

constexpr std::string_view to_string(errc e) noexcept
{
    switch (e) {
    case errc::domain_mismatch: return "domain-mismatch";
    case errc::invalid_argument: return "invalid-argument";
    case errc::undefined_resultant: return "undefined-resultant";
    case errc::degenerate_curve: return "degenerate-curve";
    case errc::degenerate_locus: return "degenerate-locus";
    case errc::not_in_locus: return "not-in-L_g";
    case errc::not_normalizable: return "not-normalizable";
    case errc::precondition_failed: return "precondition-failed";
    case errc::degenerate_model: return "degenerate-model";
    case errc::invalid_root: return "invalid-root";
    case errc::numeric_failure: return "numeric-failure";
    case errc::invalid_comparison: return "invalid-comparison";
    case errc::not_applicable: return "not-applicable";
    case errc::parse_error: return "parse-error";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

}  // namespace hyperinv
