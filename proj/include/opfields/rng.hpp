/*
   Copyright 2026 The opfields authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef OPFIELDS_RNG_HPP
#define OPFIELDS_RNG_HPP

#include <cstdint>

#include "field.hpp"

namespace opfields {

/// SplitMix64. Self-contained so that seeded runs are byte-identical
/// across platforms and standard library versions.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next()
    {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n).
    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

    /// Uniform in [lo, hi].
    long long range(long long lo, long long hi)
    {
        return lo + static_cast<long long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

  private:
    uint64_t state_;
};

/// Small random field element: integers in [-4, 4], and for function
/// fields degree <= 2 polynomials over such integers.
template <field K>
K random_scalar(SplitMix64& rng)
{
    if constexpr (is_function_field<K>) {
        using C = typename field_traits<K>::base_type;
        std::vector<C> cs;
        int deg = static_cast<int>(rng.below(3));
        for (int i = 0; i <= deg; ++i) cs.push_back(C::from_int(rng.range(-4, 4)));
        return K(Poly<C>(cs));
    } else {
        return K::from_int(rng.range(-4, 4));
    }
}

template <field K>
K random_nonzero_scalar(SplitMix64& rng)
{
    for (;;) {
        K x = random_scalar<K>(rng);
        if (!x.is_zero()) return x;
    }
}

}  // namespace opfields

#endif
