#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "genwait/group.hpp"

namespace genwait {

// Parsed group specification. Grammar:
//   spec := term ("*" term)*
//   term := name | "GD(" int ";" int ("," int)* ")" | "perm(" int "){" gens "}"
//   name := ("S"|"A"|"C"|"D") int | "Q8" | "E(" int "," int ")"
// Cycle notation is 1-indexed with whitespace-separated points; generators
// are comma-separated, cycles within one generator juxtaposed.
// Products act on disjoint point sets.
class GroupSpec {
public:
  enum class Kind { Named, Elementary, SemidirectInvolution, Raw };

  struct Term {
    Kind kind = Kind::Named;
    char family = 0;                      // 'S','A','C','D','Q' for Named
    std::uint32_t n = 0;                  // family parameter (Q8: fixed 8)
    std::uint32_t prime = 0, rank = 0;    // Elementary: E(prime, rank)
    std::uint32_t gd_rank = 0;            // SemidirectInvolution
    std::vector<std::uint32_t> gd_primes;
    std::uint32_t raw_degree = 0;         // Raw
    std::vector<std::vector<std::vector<std::uint32_t>>> raw_cycles;  // gen -> cycles -> 1-indexed pts
    bool operator==(const Term&) const = default;
  };

  static GroupSpec parse(std::string_view text);

  std::string print() const;  // canonical text; parse(print(x)) == x
  Group build() const;
  Point degree() const;

  const std::vector<Term>& terms() const { return terms_; }
  bool operator==(const GroupSpec&) const = default;

private:
  std::vector<Term> terms_;
};

}  // namespace genwait
