#pragma once

#include <string>
#include <vector>

#include "cwm/core.hpp"
#include "cwm/partition.hpp"
#include "oracles.hpp"

namespace testing {

inline cwm::Linkage linkage(const std::string& text) { return cwm::parse_lengths(text); }

inline cwm::CyclicPartition label(const std::string& text, int n) { return cwm::CyclicPartition::parse(text, n); }

inline oracle::Label as_oracle(const cwm::CyclicPartition& p) { return p.to_lists(); }

inline std::vector<oracle::Rational> lengths_of(const cwm::Linkage& l) {
  return {l.lengths().begin(), l.lengths().end()};
}

// Generic linkages used by the property sweeps, n = 4..6.
inline const std::vector<std::string>& sweep_linkages() {
  static const std::vector<std::string> all = {
      "1,1,1,1/2",     "1,2,2,2",       "3,4,5,1",         "1,1,1,5/2",
      "1,1,1,1,1",     "1,1,1,1,7/2",   "6/5,1,1,4/5,11/5", "3,1,1,4,4",
      "1,2,3,4,5",     "2,2,2,1,3/2",     "1,1,1,1,1,3/2",   "1,1,1,1,1,9/2",
      "1,2,3,4,5,13/2", "2,1,1,1,1,3/2", "1,1,2,2,3,4",     "5,1,1,1,1,2",
  };
  return all;
}

}  // namespace testing
