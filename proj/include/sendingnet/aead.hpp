#pragma once

#include <array>
#include <optional>
#include <span>

#include "sendingnet/bytes.hpp"

namespace sn {

using AeadKey = std::array<uint8_t, 32>;
using AeadNonce = std::array<uint8_t, 12>;

/// AES-256-GCM. Ciphertext carries the 16-byte tag at the end.
Bytes aead_seal(const AeadKey& key, const AeadNonce& nonce, std::span<const uint8_t> plaintext,
                std::span<const uint8_t> aad);

/// Returns nullopt on authentication failure.
std::optional<Bytes> aead_open(const AeadKey& key, const AeadNonce& nonce,
                               std::span<const uint8_t> ciphertext, std::span<const uint8_t> aad);

}  // namespace sn
