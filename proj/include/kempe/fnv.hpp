// Copyright 2026 The kempelab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KEMPE_FNV_HPP
#define KEMPE_FNV_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace kempe {

// FNV-1a, 64 bit. Used for graph/coloring fingerprints and corpus file
// checksums; stable across platforms and runs.
class fnv1a {
public:
    void mix_byte(unsigned char b) {
        h_ ^= b;
        h_ *= 0x100000001b3ULL;
    }
    void mix_u64(std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            mix_byte(static_cast<unsigned char>(v & 0xff));
            v >>= 8;
        }
    }
    void mix_i32(std::int32_t v) { mix_u64(static_cast<std::uint64_t>(static_cast<std::uint32_t>(v))); }
    void mix_bytes(std::string_view s) {
        for (unsigned char b : s)
            mix_byte(b);
    }
    std::uint64_t value() const { return h_; }

private:
    std::uint64_t h_ = 0xcbf29ce484222325ULL;
};

std::string to_hex(std::uint64_t v);

// splitmix64 step, used to derive per-restart seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace kempe

#endif
