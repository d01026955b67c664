#include "fracnup/errors.hpp"

namespace fracnup {

const char* error_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::parameter: return "E_PARAMETER";
        case ErrorKind::domain: return "E_DOMAIN";
        case ErrorKind::capacity: return "E_CAPACITY";
        case ErrorKind::coverage: return "E_COVERAGE";
        case ErrorKind::tail_mass: return "E_TAIL_MASS";
        case ErrorKind::symbol: return "E_SYMBOL";
        case ErrorKind::evaluator: return "E_EVALUATOR";
        case ErrorKind::degenerate: return "E_DEGENERATE";
        case ErrorKind::denominator_vanishing: return "E_DENOMINATOR_VANISHING";
        case ErrorKind::support: return "E_SUPPORT";
        case ErrorKind::size: return "E_SIZE";
        case ErrorKind::pole: return "E_POLE";
        case ErrorKind::precondition: return "E_PRECONDITION";
        case ErrorKind::config: return "E_CONFIG";
        case ErrorKind::accuracy: return "E_ACCURACY";
        case ErrorKind::resolution: return "E_RESOLUTION";
        case ErrorKind::truncation: return "E_TRUNCATION";
    }
    return "E_UNKNOWN";
}

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::accuracy:
        case ErrorKind::resolution:
        case ErrorKind::truncation:
            return 3;
        default:
            return 2;
    }
}

}  // namespace fracnup
