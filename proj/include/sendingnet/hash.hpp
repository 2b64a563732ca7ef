#pragma once

#include <array>
#include <span>
#include <string>

#include "sendingnet/bytes.hpp"

namespace sn {

using Digest = std::array<uint8_t, 32>;

Digest sha256(std::span<const uint8_t> data);
Digest sha256(const Bytes& data);
Digest sha256(const std::string& data);

/// H(label || data); every domain-separated derivation in the protocol goes
/// through this.
Digest sha256_labeled(const std::string& label, std::span<const uint8_t> data);

inline std::string digest_hex(const Digest& d) {
    return to_hex(std::span<const uint8_t>(d.data(), d.size()));
}

}  // namespace sn
