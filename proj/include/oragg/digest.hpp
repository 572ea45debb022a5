// Copyright 2026 The oragg Authors
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

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace oragg {

using Byte = std::uint8_t;
using Bytes = std::vector<Byte>;
using BytesView = std::span<const Byte>;

// Arbitrary-length byte string; an empty block is permitted.
using DataBlock = Bytes;

// 32 bytes of key material.
using Key = std::array<Byte, 32>;

inline constexpr std::size_t kDigestSize = 32;

/// 32-byte hash value; equality is byte-wise.
struct Digest {
    std::array<Byte, kDigestSize> bytes{};

    friend auto operator<=>(const Digest&, const Digest&) = default;

    // Word-wise comparison with an early exit; this sits on the membership
    // search's hottest path.
    friend bool operator==(const Digest& a, const Digest& b) {
        std::uint64_t aw[4];
        std::uint64_t bw[4];
        std::memcpy(aw, a.bytes.data(), sizeof aw);
        std::memcpy(bw, b.bytes.data(), sizeof bw);
        return aw[0] == bw[0] && aw[1] == bw[1] && aw[2] == bw[2] && aw[3] == bw[3];
    }
};

struct DigestHash {
    std::size_t operator()(const Digest& d) const noexcept {
        // Digests are uniformly distributed; the first eight bytes suffice.
        std::size_t h = 0;
        for (int i = 0; i < 8; ++i) {
            h = (h << 8) | d.bytes[static_cast<std::size_t>(i)];
        }
        return h;
    }
};

Digest sha256(BytesView data);
Digest sha256(std::initializer_list<BytesView> parts);

Digest hmac_sha256(const Key& key, std::initializer_list<BytesView> parts);

// Constant-time tag comparison.
bool tags_equal(const Digest& a, const Digest& b);

std::string to_hex(const Digest& d);
std::string to_hex(BytesView data);
std::optional<Digest> digest_from_hex(std::string_view hex);
std::optional<Bytes> bytes_from_hex(std::string_view hex);

inline BytesView as_bytes(std::string_view s) {
    return {reinterpret_cast<const Byte*>(s.data()), s.size()};
}

inline BytesView as_bytes(const Digest& d) {
    return {d.bytes.data(), d.bytes.size()};
}

}  // namespace oragg
