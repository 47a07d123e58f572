#pragma once

#include "svq/eval_svs.hpp"

namespace svq {

inline SVS svs_zero() { return SVS::coskeletal(trunc_zero()); }
inline SVS svs_id(int d) { return SVS::coskeletal(trunc_id(d)); }
inline SVS svs_pair(int d) { return SVS::coskeletal(trunc_pair(d)); }

// B^n Q: Q in normalized degree n; DK of the point complex Q[-n].
inline SVS svs_bnr(int n) {
  if (n < 0) throw std::invalid_argument("bnr: n must be >= 0");
  return SVS::from_complex(ChainCx::point(n));
}

}  // namespace svq
