#include "brt/error.hpp"

namespace brt {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::NotPartition: return "NotPartition";
    case ErrorCode::NotBijection: return "NotBijection";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::LoopContraction: return "LoopContraction";
    case ErrorCode::IsolatedVertex: return "IsolatedVertex";
    case ErrorCode::NotQuasiTree: return "NotQuasiTree";
    case ErrorCode::SplitRoot: return "SplitRoot";
    case ErrorCode::NegativeExponent: return "NegativeExponent";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace brt
