#include "cutnerve/error.hpp"

namespace cutnerve {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidParameter: return "invalid-parameter";
        case ErrorKind::InvalidFace: return "invalid-face";
        case ErrorKind::ResourceLimit: return "resource-limit";
        case ErrorKind::UndefinedOnVoid: return "undefined-on-void";
        case ErrorKind::EmptyVertexSet: return "empty-vertex-set";
        case ErrorKind::EmptyCover: return "empty-cover";
        case ErrorKind::InvalidCollapse: return "invalid-collapse";
        case ErrorKind::InvalidMatching: return "invalid-matching";
        case ErrorKind::GuardViolation: return "guard";
        case ErrorKind::UnknownScenario: return "unknown-scenario";
        case ErrorKind::Parse: return "parse";
    }
    return "error";
}

}  // namespace cutnerve
