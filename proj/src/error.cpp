#include "alttam/error.hpp"

namespace alttam {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadAlphabet: return "BadAlphabet";
    case ErrorKind::NonDyckWord: return "NonDyckWord";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SpanOutOfRange: return "SpanOutOfRange";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::SizeTooLarge: return "SizeTooLarge";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::UnknownElement: return "UnknownElement";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::LeafOutOfRange: return "LeafOutOfRange";
    case ErrorKind::RootEdgeForbidden: return "RootEdgeForbidden";
    case ErrorKind::InvalidInterval: return "InvalidInterval";
    case ErrorKind::NotAValley: return "NotAValley";
    case ErrorKind::NotACovering: return "NotACovering";
    case ErrorKind::NotLeft: return "NotLeft";
    case ErrorKind::NotRight: return "NotRight";
    case ErrorKind::NotLinear: return "NotLinear";
    case ErrorKind::HeightOutOfRange: return "HeightOutOfRange";
    case ErrorKind::OrderExceeded: return "OrderExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace alttam
