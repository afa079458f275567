#include "harnack/errors.hpp"

namespace harnack {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotHermitian: return "NotHermitian";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::BadRange: return "BadRange";
        case ErrorKind::BadDomain: return "BadDomain";
        case ErrorKind::HypothesisFailed: return "HypothesisFailed";
        case ErrorKind::NotUnitary: return "NotUnitary";
        case ErrorKind::NotPSD: return "NotPSD";
        case ErrorKind::StrictContractionRequired: return "StrictContractionRequired";
        case ErrorKind::SingularHypothesis: return "SingularHypothesis";
        case ErrorKind::WeightError: return "WeightError";
        case ErrorKind::UnknownInequality: return "UnknownInequality";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Error";
}

} // namespace harnack
