#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pmaps/map_core.hpp"

namespace pmaps {

enum class CodeMode : std::uint8_t { Paren = 0, Parametric = 1 };

// One encoded rooted 3-connected map.
// lengths: {edges} in paren mode; in parametric mode the node counts of the
// tree's two color classes, the class of the root node first.
struct CodeBits {
  int version = 1;
  CodeMode mode = CodeMode::Paren;
  bool edge_added = false;
  std::vector<std::uint64_t> lengths;
  std::vector<bool> payload;
  std::uint64_t root_index = 0;
  unsigned root_bits = 0;
  bool operator==(const CodeBits&) const = default;
};

CodeBits encode(const PlanarMap& g, CodeMode mode = CodeMode::Paren);
// Decoded map in canonical numbering (root dart 0).
PlanarMap decode(const CodeBits& code);

// Payload bit count implied by the lengths.
std::uint64_t payload_length(CodeMode mode, const std::vector<std::uint64_t>& lengths);

// Header byte, varint lengths, then payload and root index bits, MSB first,
// zero-padded to a byte.
std::vector<std::uint8_t> to_bytes(const CodeBits& code);
CodeBits from_bytes(const std::vector<std::uint8_t>& bytes);
// ".p3c" file: magic "P3C1" followed by one record.
std::vector<std::uint8_t> write_p3c(const CodeBits& code);
CodeBits read_p3c(const std::vector<std::uint8_t>& bytes);

struct CodeLengthReport {
  std::uint64_t payload_bits = 0, root_bits = 0, framing_bits = 0, bits_total = 0;
  int edges = 0;
  double bits_per_edge = 0;
};
CodeLengthReport code_length_report(const PlanarMap& g, CodeMode mode = CodeMode::Paren);

}  // namespace pmaps
