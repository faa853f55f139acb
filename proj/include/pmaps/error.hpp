#pragma once

#include <stdexcept>
#include <string>

namespace pmaps {

enum class Errc {
  NonInvolution,
  NotPermutation,
  Disconnected,
  NonPlanar,
  OddCycle,
  NotSimpleCycle,
  MissingRoot,
  ParseError,
  NotBlackRooted,
  NotBicolored,
  LengthMismatch,
  CompositionMismatch,
  EmptyClass,
  UnbalancedWord,
  TrailingBits,
  RankOutOfRange,
  HasClockwiseCircuit,
  InvalidTriOrientation,
  NotIrreducible,
  NotOuterTriangular,
  NoEligibleVertex,
  NotQuadrangulation,
  RootNotBlack,
  NotComplete,
  TooSmall,
  NotPlanarMap,
  MalformedHeader,
  BadRootIndex,
  TooLarge,
  InvalidArgument,
  TrialCapReached,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace pmaps
