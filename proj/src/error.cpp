#include "ifsjacobi/error.hpp"

namespace ifsjacobi {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::RankExceeded: return "RankExceeded";
    case ErrorKind::DegenerateMeasure: return "DegenerateMeasure";
    case ErrorKind::DegenerateStep: return "DegenerateStep";
    case ErrorKind::EigenFailure: return "EigenFailure";
    case ErrorKind::InvalidTarget: return "InvalidTarget";
    case ErrorKind::EmptyWindow: return "EmptyWindow";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace ifsjacobi
