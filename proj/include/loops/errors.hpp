#pragma once

#include <stdexcept>
#include <string>

namespace loops {

enum class Errc {
  NotLatin,
  NoIdentity,
  BadIndex,
  BadBlock,
  PairMissing,
  PairDuplicated,
  BadResidue,
  OrderCap,
  NotSteiner,
  NotNormal,
  UnsupportedParams,
  NotAbelian,
  NotSteinerLike,
  HypothesisFailed,
  BlockViolation,
  DegenerateAbelian,
  NotBijective,
  ClosureCap,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotLatin: return "NotLatin";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::BadIndex: return "BadIndex";
    case Errc::BadBlock: return "BadBlock";
    case Errc::PairMissing: return "PairMissing";
    case Errc::PairDuplicated: return "PairDuplicated";
    case Errc::BadResidue: return "BadResidue";
    case Errc::OrderCap: return "OrderCap";
    case Errc::NotSteiner: return "NotSteiner";
    case Errc::NotNormal: return "NotNormal";
    case Errc::UnsupportedParams: return "UnsupportedParams";
    case Errc::NotAbelian: return "NotAbelian";
    case Errc::NotSteinerLike: return "NotSteinerLike";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::BlockViolation: return "BlockViolation";
    case Errc::DegenerateAbelian: return "DegenerateAbelian";
    case Errc::NotBijective: return "NotBijective";
    case Errc::ClosureCap: return "ClosureCap";
    case Errc::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace loops
