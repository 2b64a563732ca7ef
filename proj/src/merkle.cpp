#include "sendingnet/merkle.hpp"

#include <algorithm>

#include "sendingnet/bytes.hpp"

namespace sn::merkle {

Digest leaf_hash(const Digest& event_id, uint64_t message_size) {
    ByteWriter w;
    w.raw(event_id);
    w.u64(message_size);
    return sha256(w.bytes());
}

Digest root(std::span<const Digest> leaves) {
    if (leaves.empty()) return Digest{};
    std::vector<Digest> level(leaves.begin(), leaves.end());
    while (level.size() > 1) {
        std::vector<Digest> next;
        next.reserve((level.size() + 1) / 2);
        size_t i = 0;
        for (; i + 1 < level.size(); i += 2) {
            ByteWriter w;
            w.raw(level[i]);
            w.raw(level[i + 1]);
            next.push_back(sha256(w.bytes()));
        }
        if (i < level.size()) next.push_back(level[i]);  // odd node promoted
        level = std::move(next);
    }
    return level[0];
}

Digest receipt_root(std::span<const std::pair<Digest, uint64_t>> entries) {
    std::vector<std::pair<Digest, uint64_t>> sorted(entries.begin(), entries.end());
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Digest> leaves;
    leaves.reserve(sorted.size());
    for (const auto& [id, size] : sorted) leaves.push_back(leaf_hash(id, size));
    return root(leaves);
}

}  // namespace sn::merkle
