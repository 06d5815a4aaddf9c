#pragma once

#include <stdexcept>

namespace udt {

// A finite sequence table ran out before the search condition was met.
struct RangeExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller-supplied index cap was hit before the search finished.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A witness level could not be certified at the current truncation; never a
// silent pass.
struct NeedsFinerEps : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The requested inequality can never be certified (e.g. gamma_k <= 1-2*alpha_k
// at the matched depth); the sequence has to be coarsened first.
struct NotCertifiable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace udt
