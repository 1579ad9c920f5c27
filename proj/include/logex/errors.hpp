#pragma once

#include <stdexcept>
#include <string>

namespace logex {

// Diagnostic codes surfaced by the kernel. Each maps to one CLI exit class:
// budget/precision failures exit with 3, everything else (bad input or a
// violated precondition) with 2.
enum class errc {
    non_positive_argument,
    exactness_unavailable,
    depth_budget_exceeded,
    precision_exhausted,
    zero_division,
    not_contracting,
    non_convergent,
    not_positive_infinite,
    not_taylor_configured,
    exponentiality_nonzero,
    not_steep_residual,
    resonance,
    not_conjugate,
    syntax_error,
    unknown_function,
    precondition_violated,
};

inline const char* errc_name(errc c) {
    switch (c) {
    case errc::non_positive_argument: return "NonPositiveArgument";
    case errc::exactness_unavailable: return "ExactnessUnavailable";
    case errc::depth_budget_exceeded: return "DepthBudgetExceeded";
    case errc::precision_exhausted: return "PrecisionExhausted";
    case errc::zero_division: return "ZeroDivision";
    case errc::not_contracting: return "NotContracting";
    case errc::non_convergent: return "NonConvergent";
    case errc::not_positive_infinite: return "NotPositiveInfinite";
    case errc::not_taylor_configured: return "NotTaylorConfigured";
    case errc::exponentiality_nonzero: return "ExponentialityNonzero";
    case errc::not_steep_residual: return "NotSteepResidual";
    case errc::resonance: return "Resonance";
    case errc::not_conjugate: return "NotConjugate";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_function: return "UnknownFunction";
    case errc::precondition_violated: return "PreconditionViolated";
    }
    return "UnknownError";
}

// True for errors caused by exhausted budgets or lost precision, as opposed
// to malformed or out-of-domain input.
inline bool is_budget_error(errc c) {
    switch (c) {
    case errc::depth_budget_exceeded:
    case errc::precision_exhausted:
    case errc::non_convergent:
    case errc::exponentiality_nonzero:
        return true;
    default:
        return false;
    }
}

class kernel_error : public std::runtime_error {
public:
    kernel_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw kernel_error(code, what); }

} // namespace logex
