#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sendingnet/hash.hpp"

namespace sn::merkle {

/// Leaf for a relayed message: H(event_id || message_size_be64).
Digest leaf_hash(const Digest& event_id, uint64_t message_size);

/// Binary tree over already-hashed leaves: parent = H(left || right), a
/// trailing odd node is promoted unhashed. Empty input is the zero digest.
Digest root(std::span<const Digest> leaves);

/// Root over (event_id, size) entries, sorted by event_id first.
Digest receipt_root(std::span<const std::pair<Digest, uint64_t>> entries);

}  // namespace sn::merkle
