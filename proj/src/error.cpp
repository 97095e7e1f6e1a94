#include "sweepmap/error.hpp"

namespace sweepmap {

const char* errc_name(errc code) {
    switch (code) {
        case errc::non_positive: return "NonPositive";
        case errc::non_coprime: return "NonCoprime";
        case errc::bad_alphabet: return "BadAlphabet";
        case errc::wrong_step_counts: return "WrongStepCounts";
        case errc::not_dyck: return "NotDyck";
        case errc::missing_zero: return "MissingZero";
        case errc::wrong_cardinality: return "WrongCardinality";
        case errc::invalid_rank_set: return "InvalidRankSet";
        case errc::non_integral_area: return "NonIntegralArea";
        case errc::is_base_path: return "IsBasePath";
        case errc::precond_violated: return "PrecondViolated";
        case errc::non_positive_shift: return "NonPositiveShift";
        case errc::missing_delta_rank: return "MissingDeltaRank";
        case errc::label_out_of_range: return "LabelOutOfRange";
        case errc::not_fuss_frame: return "NotFussFrame";
        case errc::invalid_sigma: return "InvalidSigma";
        case errc::length_mismatch: return "LengthMismatch";
        case errc::no_preimage: return "NoPreimage";
        case errc::algorithm_inapplicable: return "AlgorithmInapplicable";
        case errc::budget_exceeded: return "BudgetExceeded";
    }
    return "UnknownError";
}

}  // namespace sweepmap
