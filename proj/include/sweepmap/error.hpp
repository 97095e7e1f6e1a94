#pragma once

#include <stdexcept>
#include <string>

namespace sweepmap {

enum class errc {
    non_positive,
    non_coprime,
    bad_alphabet,
    wrong_step_counts,
    not_dyck,
    missing_zero,
    wrong_cardinality,
    invalid_rank_set,
    non_integral_area,
    is_base_path,
    precond_violated,
    non_positive_shift,
    missing_delta_rank,
    label_out_of_range,
    not_fuss_frame,
    invalid_sigma,
    length_mismatch,
    no_preimage,
    algorithm_inapplicable,
    budget_exceeded,
};

const char* errc_name(errc code);

class sweep_error : public std::runtime_error {
public:
    sweep_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) {
    throw sweep_error(code, what);
}

}  // namespace sweepmap
