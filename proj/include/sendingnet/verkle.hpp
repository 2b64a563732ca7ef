#pragma once

#include <array>
#include <memory>
#include <optional>

#include "sendingnet/kzg.hpp"

namespace sn::verkle {

using Key = std::array<uint8_t, 32>;

struct Account {
    uint64_t balance = 0;
    uint64_t nonce = 0;
    bool operator==(const Account&) const = default;
};

/// One trie level: the node commitment, the child slot taken by the key, the
/// child digest proven at that slot, and the KZG evaluation witness.
struct ProofLevel {
    group::GroupElement commitment;
    uint8_t nibble = 0;
    kzg::Scalar child_digest;
    group::GroupElement witness;
};

struct PathProof {
    enum class Terminal { Empty, Leaf };

    std::vector<ProofLevel> levels;
    Terminal terminal = Terminal::Empty;
    Key leaf_key{};        // set when terminal == Leaf
    Account leaf_account;  // set when terminal == Leaf
};

/// Digest of an inner node: H(commitment encoding) reduced into the scalar
/// field. Empty child slots have digest zero.
kzg::Scalar node_digest(const group::GroupElement& commitment);
kzg::Scalar leaf_digest(const Key& key, const Account& account);

/// Radix-16 trie over key nibbles whose inner nodes are KZG vector
/// commitments (arity 16). Leaves sit at the first depth where their key
/// prefix is unique; inner commitments are maintained homomorphically.
class VerkleTree {
public:
    explicit VerkleTree(std::shared_ptr<const kzg::KzgParams> params);
    VerkleTree(VerkleTree&&) = default;
    VerkleTree& operator=(VerkleTree&&) = default;

    void update(const Key& key, const Account& account);
    std::optional<Account> get(const Key& key) const;
    PathProof prove(const Key& key) const;

    kzg::Scalar root_digest() const;
    size_t leaf_count() const { return leaf_count_; }

    VerkleTree clone() const;

    /// Recomputes every cached commitment bottom-up and compares; test hook
    /// for the running-commitment invariant.
    bool check_cached_commitments() const;

    const kzg::KzgParams& params() const { return *params_; }

    struct Node;

private:
    std::shared_ptr<const kzg::KzgParams> params_;
    std::unique_ptr<Node> root_;
    size_t leaf_count_ = 0;
};

/// Walks root to leaf checking one pairing equation per level. A nullopt
/// account is a non-membership claim: the path must end in an empty slot or
/// in a leaf carrying a different key.
bool verify_path(const kzg::KzgParams& params, const kzg::Scalar& root_digest, const Key& key,
                 const std::optional<Account>& account, const PathProof& proof);

}  // namespace sn::verkle
