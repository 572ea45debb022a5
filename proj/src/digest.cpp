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

#include "oragg/digest.hpp"

#include <openssl/crypto.h>
#include <openssl/evp.h>

#include <cstring>
#include <stdexcept>

namespace oragg {

namespace {

// Provider lookups dominate per-call cost in OpenSSL 3; fetch the
// algorithms once and reuse per-thread contexts.

const EVP_MD* sha256_md() {
    static EVP_MD* md = EVP_MD_fetch(nullptr, "SHA2-256", nullptr);
    if (md == nullptr) {
        throw std::runtime_error("SHA2-256 is unavailable in this OpenSSL build");
    }
    return md;
}

struct DigestCtx {
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    ~DigestCtx() { EVP_MD_CTX_free(ctx); }
};

EVP_MD_CTX* digest_ctx() {
    thread_local DigestCtx holder;
    return holder.ctx;
}

// HMAC-SHA-256 built directly on the digest contexts: per thread, keep
// inner/outer contexts already fed with the padded key, and clone them per
// message. This sidesteps EVP_MAC (whose context reuse misbehaves on some
// OpenSSL 3.0 patch levels) and skips the key schedule on repeated keys.
constexpr std::size_t kHmacBlockSize = 64;

struct MacTemplates {
    EVP_MD_CTX* inner = EVP_MD_CTX_new();
    EVP_MD_CTX* outer = EVP_MD_CTX_new();
    EVP_MD_CTX* work = EVP_MD_CTX_new();
    Key current_key{};
    bool keyed = false;

    ~MacTemplates() {
        EVP_MD_CTX_free(inner);
        EVP_MD_CTX_free(outer);
        EVP_MD_CTX_free(work);
    }

    void key_for(const Key& key) {
        if (keyed && key == current_key) {
            return;
        }
        std::array<Byte, kHmacBlockSize> pad;
        pad.fill(0x36);
        for (std::size_t i = 0; i < key.size(); ++i) {
            pad[i] ^= key[i];
        }
        if (EVP_DigestInit_ex2(inner, sha256_md(), nullptr) != 1 ||
            EVP_DigestUpdate(inner, pad.data(), pad.size()) != 1) {
            throw std::runtime_error("HMAC inner pad hashing failed");
        }
        pad.fill(0x5c);
        for (std::size_t i = 0; i < key.size(); ++i) {
            pad[i] ^= key[i];
        }
        if (EVP_DigestInit_ex2(outer, sha256_md(), nullptr) != 1 ||
            EVP_DigestUpdate(outer, pad.data(), pad.size()) != 1) {
            throw std::runtime_error("HMAC outer pad hashing failed");
        }
        current_key = key;
        keyed = true;
    }
};

MacTemplates& mac_templates() {
    thread_local MacTemplates holder;
    return holder;
}

}  // namespace

Digest sha256(BytesView data) {
    EVP_MD_CTX* ctx = digest_ctx();
    Digest out;
    unsigned int len = 0;
    if (EVP_DigestInit_ex2(ctx, sha256_md(), nullptr) != 1 ||
        EVP_DigestUpdate(ctx, data.data(), data.size()) != 1 ||
        EVP_DigestFinal_ex(ctx, out.bytes.data(), &len) != 1) {
        throw std::runtime_error("SHA-256 computation failed");
    }
    return out;
}

Digest sha256(std::initializer_list<BytesView> parts) {
    EVP_MD_CTX* ctx = digest_ctx();
    Digest out;
    unsigned int len = 0;
    if (EVP_DigestInit_ex2(ctx, sha256_md(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 computation failed");
    }
    for (const BytesView& part : parts) {
        if (EVP_DigestUpdate(ctx, part.data(), part.size()) != 1) {
            throw std::runtime_error("SHA-256 computation failed");
        }
    }
    if (EVP_DigestFinal_ex(ctx, out.bytes.data(), &len) != 1) {
        throw std::runtime_error("SHA-256 computation failed");
    }
    return out;
}

Digest hmac_sha256(const Key& key, std::initializer_list<BytesView> parts) {
    MacTemplates& holder = mac_templates();
    holder.key_for(key);

    unsigned int len = 0;
    Digest inner_digest;
    if (EVP_MD_CTX_copy_ex(holder.work, holder.inner) != 1) {
        throw std::runtime_error("HMAC computation failed");
    }
    for (const BytesView& part : parts) {
        if (EVP_DigestUpdate(holder.work, part.data(), part.size()) != 1) {
            throw std::runtime_error("HMAC computation failed");
        }
    }
    if (EVP_DigestFinal_ex(holder.work, inner_digest.bytes.data(), &len) != 1) {
        throw std::runtime_error("HMAC computation failed");
    }

    Digest tag;
    if (EVP_MD_CTX_copy_ex(holder.work, holder.outer) != 1 ||
        EVP_DigestUpdate(holder.work, inner_digest.bytes.data(), inner_digest.bytes.size()) != 1 ||
        EVP_DigestFinal_ex(holder.work, tag.bytes.data(), &len) != 1) {
        throw std::runtime_error("HMAC computation failed");
    }
    return tag;
}

bool tags_equal(const Digest& a, const Digest& b) {
    return CRYPTO_memcmp(a.bytes.data(), b.bytes.data(), kDigestSize) == 0;
}

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::string to_hex(BytesView data) {
    std::string out;
    out.reserve(data.size() * 2);
    for (Byte b : data) {
        out.push_back(kHexDigits[b >> 4]);
        out.push_back(kHexDigits[b & 0x0f]);
    }
    return out;
}

std::string to_hex(const Digest& d) {
    return to_hex(as_bytes(d));
}

std::optional<Bytes> bytes_from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) {
        return std::nullopt;
    }
    Bytes out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        const int hi = hex_value(hex[2 * i]);
        const int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) {
            return std::nullopt;
        }
        out[i] = static_cast<Byte>((hi << 4) | lo);
    }
    return out;
}

std::optional<Digest> digest_from_hex(std::string_view hex) {
    if (hex.size() != 2 * kDigestSize) {
        return std::nullopt;
    }
    auto bytes = bytes_from_hex(hex);
    if (!bytes) {
        return std::nullopt;
    }
    Digest d;
    std::memcpy(d.bytes.data(), bytes->data(), kDigestSize);
    return d;
}

}  // namespace oragg
