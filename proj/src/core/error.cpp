#include "bpk/error.hpp"

namespace bpk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotAForest: return "NotAForest";
    case ErrorKind::NotInClosure: return "NotInClosure";
    case ErrorKind::Unreachable: return "Unreachable";
    case ErrorKind::DegeneratePosition: return "DegeneratePosition";
    case ErrorKind::DuplicateChord: return "DuplicateChord";
    case ErrorKind::BadParams: return "BadParams";
    case ErrorKind::NotTransparent: return "NotTransparent";
    case ErrorKind::NotStarForest: return "NotStarForest";
    case ErrorKind::AdjacentCrossing: return "AdjacentCrossing";
    case ErrorKind::CoverMismatch: return "CoverMismatch";
    case ErrorKind::RadiusExceeded: return "RadiusExceeded";
    case ErrorKind::ModelHostMismatch: return "ModelHostMismatch";
    case ErrorKind::NotCircular: return "NotCircular";
    case ErrorKind::NotSpanning: return "NotSpanning";
  }
  return "Unknown";
}

}  // namespace bpk
