#pragma once

#include <optional>
#include <string>

#include "elco/families.hpp"
#include "elco/gf.hpp"
#include "elco/hamming.hpp"

namespace elco {

/// A parsed code selector:
///   perm:A,q,l | perm:S,q,l | perm:odd,q,l   permutation codes C(T,l)
///   rep:q,m                                  repetition code
///   rm:q,d                                   RM_q(s-1,d), s = (q-1)d - 1
///   rmtop:q,d                                RM_q(s,d)
///   file:PATH                                code file (header "m q")
struct Selection {
  std::string selector;
  Code code;
  std::optional<families::RMPair> rm;      // present for rm/rmtop selectors
  std::optional<gf::FieldSpec> field;      // present whenever q is a supported field order
};

Selection parse_selector(const std::string& text,
                         std::uint64_t bound = families::kDefaultCodeBound,
                         const gf::ModulusTable* moduli = nullptr);

}  // namespace elco
