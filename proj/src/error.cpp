#include "bcp/error.hpp"

namespace bcp {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::syntax_error: return "SyntaxError";
        case ErrorCode::negative_time: return "NegativeTime";
        case ErrorCode::negative_weight: return "NegativeWeight";
        case ErrorCode::non_positive_speed: return "NonPositiveSpeed";
        case ErrorCode::duplicate_point: return "DuplicatePoint";
        case ErrorCode::shared_endpoint: return "SharedEndpoint";
        case ErrorCode::empty_input: return "EmptyInput";
        case ErrorCode::duplicate_rank: return "DuplicateRank";
        case ErrorCode::unknown_id: return "UnknownId";
        case ErrorCode::invalid_interval: return "InvalidInterval";
        case ErrorCode::cyclic_pred: return "CyclicPred";
        case ErrorCode::not_a_path: return "NotAPath";
        case ErrorCode::too_large: return "TooLarge";
        case ErrorCode::not_crossing: return "NotCrossing";
        case ErrorCode::uncoverable: return "Uncoverable";
        case ErrorCode::invariant_breach: return "InvariantBreach";
    }
    return "Unknown";
}

}  // namespace bcp
