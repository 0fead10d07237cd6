#pragma once

#include <stdexcept>
#include <string>

namespace perco {

// Every refusal in the library carries one of these codes. Exhaustive
// enumeration caps fail loudly instead of degrading to sampling.
enum class Err {
    invalid_size,
    exhaustive_limit_exceeded,
    not_two_percolation_compatible,
    negative_weight,
    mass_mismatch,
    target_above_marginal,
    state_space_too_large,
    below_validity_threshold,
    out_of_piece,
    out_of_range,
    above_threshold,
    non_linear_programme,
    infeasible,
    unbounded,
    singular_system,
    no_sign_change,
    fiber_too_large,
    usage_error,
    io_error,
    internal,
};

const char* err_name(Err e);

class PercoError : public std::runtime_error {
public:
    PercoError(Err code, const std::string& msg)
        : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
    throw PercoError(code, msg);
}

inline void require(bool cond, Err code, const std::string& msg) {
    if (!cond) fail(code, msg);
}

} // namespace perco
