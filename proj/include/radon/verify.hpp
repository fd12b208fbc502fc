#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "radon/report.hpp"

namespace radon {

struct VerifyOptions {
  bool full = false;  // quick: exact suite only (criteria 1-7)
  uint64_t seed = 7;
  size_t samples = 1000000;
  size_t trunc = 20;
  unsigned threads = 0;  // 0: RADON_THREADS / hardware
};

// check names start with "cNN." where NN is the acceptance criterion
Report verify_all(const VerifyOptions& opt);

// "c09.kummer.r2.mc" -> 9; 0 if the name carries no criterion prefix
int criterion_of(const std::string& check_name);

}  // namespace radon
