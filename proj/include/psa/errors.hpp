#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace psa {

// Error categories. The CLI maps these onto exit codes: input errors -> 2,
// numerical errors -> 3, internal invariant breaches -> 4.
enum class errc {
    invalid_argument,
    invalid_domain,
    unsupported_order,
    insufficient_data,
    degenerate_knots,
    ill_conditioned,
    not_psd,
    degenerate_direction,
    iterations_exceeded,
    collinear_design,
    insufficient_df,
    shape_mismatch,
    io_error,
    internal,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// Raised when LARS meets exactly collinear active columns; carries the
// offending column indices (on the original predictor indexing).
class DegenerateDirectionError : public Error {
public:
    DegenerateDirectionError(std::vector<int> indices, const std::string& msg)
        : Error(errc::degenerate_direction, msg), indices_(std::move(indices)) {}
    const std::vector<int>& indices() const noexcept { return indices_; }

private:
    std::vector<int> indices_;
};

inline bool is_input_error(errc c) {
    switch (c) {
        case errc::invalid_argument:
        case errc::invalid_domain:
        case errc::unsupported_order:
        case errc::shape_mismatch:
        case errc::io_error:
            return true;
        default:
            return false;
    }
}

}  // namespace psa
