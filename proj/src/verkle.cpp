#include "sendingnet/verkle.hpp"

#include <cstring>
#include <stdexcept>

#include "sendingnet/bytes.hpp"
#include "sendingnet/hash.hpp"

namespace sn::verkle {

namespace {

constexpr size_t kArity = 16;
constexpr size_t kMaxDepth = 64;  // 32-byte key, 4 bits per level

uint8_t nibble_at(const Key& key, size_t depth) {
    uint8_t byte = key[depth / 2];
    return depth % 2 == 0 ? (byte >> 4) : (byte & 0x0f);
}

}  // namespace

kzg::Scalar node_digest(const group::GroupElement& commitment) {
    Bytes enc = commitment.to_bytes();
    return kzg::Scalar::from_digest(sha256_labeled("verkle-node", enc));
}

kzg::Scalar leaf_digest(const Key& key, const Account& account) {
    ByteWriter w;
    w.raw(std::span<const uint8_t>(key.data(), key.size()));
    w.u64(account.balance);
    w.u64(account.nonce);
    return kzg::Scalar::from_digest(sha256_labeled("verkle-leaf", w.bytes()));
}

/// Inner node when `children` is set, leaf otherwise.
struct VerkleTree::Node {
    struct Inner {
        std::array<std::unique_ptr<Node>, kArity> children;
        group::GroupElement commitment;  // commit_vector over child digests
    };

    std::unique_ptr<Inner> inner;
    Key key{};
    Account account;

    bool is_leaf() const { return inner == nullptr; }

    static std::unique_ptr<Node> make_inner() {
        auto node = std::make_unique<Node>();
        node->inner = std::make_unique<Inner>();
        node->inner->commitment = group::GroupElement::identity();
        return node;
    }

    static std::unique_ptr<Node> make_leaf(const Key& key, const Account& account) {
        auto node = std::make_unique<Node>();
        node->key = key;
        node->account = account;
        return node;
    }
};

namespace {

using Node = VerkleTree::Node;

kzg::Scalar digest_of(const Node* node) {
    if (node == nullptr) return kzg::Scalar::zero();
    if (node->is_leaf()) return leaf_digest(node->key, node->account);
    return node_digest(node->inner->commitment);
}

void bump_commitment(const kzg::KzgParams& params, Node* parent, uint8_t nib,
                     const kzg::Scalar& before) {
    kzg::Scalar after = digest_of(parent->inner->children[nib].get());
    parent->inner->commitment =
        kzg::update_commitment(params, kzg::Commitment{parent->inner->commitment}, nib,
                               after - before)
            .point;
}

void insert_at(const kzg::KzgParams& params, Node* node, const Key& key, const Account& account,
               size_t depth, size_t& leaf_count) {
    uint8_t nib = nibble_at(key, depth);
    Node* child = node->inner->children[nib].get();
    kzg::Scalar before = digest_of(child);

    if (child == nullptr) {
        node->inner->children[nib] = Node::make_leaf(key, account);
        leaf_count += 1;
    } else if (child->is_leaf()) {
        if (child->key == key) {
            child->account = account;
        } else {
            if (depth + 1 >= kMaxDepth)
                throw std::logic_error("verkle: key collision at maximum depth");
            // split: displaced leaf moves one level down next to the new one
            std::unique_ptr<Node> displaced = std::move(node->inner->children[nib]);
            node->inner->children[nib] = Node::make_inner();
            Node* mid = node->inner->children[nib].get();
            uint8_t displaced_nib = nibble_at(displaced->key, depth + 1);
            kzg::Scalar none = kzg::Scalar::zero();
            mid->inner->children[displaced_nib] = std::move(displaced);
            bump_commitment(params, mid, displaced_nib, none);
            insert_at(params, mid, key, account, depth + 1, leaf_count);
        }
    } else {
        insert_at(params, child, key, account, depth + 1, leaf_count);
    }
    bump_commitment(params, node, nib, before);
}

void clone_into(const Node* src, std::unique_ptr<Node>& dst) {
    if (src->is_leaf()) {
        dst = Node::make_leaf(src->key, src->account);
        return;
    }
    dst = Node::make_inner();
    dst->inner->commitment = src->inner->commitment;
    for (size_t i = 0; i < kArity; ++i) {
        if (src->inner->children[i]) clone_into(src->inner->children[i].get(), dst->inner->children[i]);
    }
}

bool check_node(const kzg::KzgParams& params, const Node* node) {
    if (node->is_leaf()) return true;
    std::vector<kzg::Scalar> vec(kArity, kzg::Scalar::zero());
    for (size_t i = 0; i < kArity; ++i) {
        const auto& child = node->inner->children[i];
        if (child && !check_node(params, child.get())) return false;
        vec[i] = digest_of(child.get());
    }
    return kzg::commit_vector(params, vec).point == node->inner->commitment;
}

}  // namespace

VerkleTree::VerkleTree(std::shared_ptr<const kzg::KzgParams> params) : params_(std::move(params)) {
    if (params_->n != kArity) throw std::invalid_argument("verkle tree requires arity-16 params");
    root_ = Node::make_inner();
}

void VerkleTree::update(const Key& key, const Account& account) {
    insert_at(*params_, root_.get(), key, account, 0, leaf_count_);
}

std::optional<Account> VerkleTree::get(const Key& key) const {
    const Node* node = root_.get();
    for (size_t depth = 0; depth < kMaxDepth; ++depth) {
        const Node* child = node->inner->children[nibble_at(key, depth)].get();
        if (child == nullptr) return std::nullopt;
        if (child->is_leaf()) {
            if (child->key == key) return child->account;
            return std::nullopt;
        }
        node = child;
    }
    return std::nullopt;
}

kzg::Scalar VerkleTree::root_digest() const { return node_digest(root_->inner->commitment); }

PathProof VerkleTree::prove(const Key& key) const {
    PathProof proof;
    const Node* node = root_.get();
    for (size_t depth = 0; depth < kMaxDepth; ++depth) {
        uint8_t nib = nibble_at(key, depth);
        const Node* child = node->inner->children[nib].get();

        std::vector<kzg::Scalar> vec(kArity, kzg::Scalar::zero());
        std::vector<kzg::Scalar> domain(kArity);
        for (size_t i = 0; i < kArity; ++i) {
            vec[i] = digest_of(node->inner->children[i].get());
            domain[i] = kzg::Scalar::from_u64(i);
        }
        kzg::Polynomial poly = kzg::interpolate(domain, vec);
        kzg::EvalProof ev = kzg::create_witness(*params_, poly, kzg::Scalar::from_u64(nib));

        proof.levels.push_back({node->inner->commitment, nib, ev.value, ev.witness});

        if (child == nullptr) {
            proof.terminal = PathProof::Terminal::Empty;
            return proof;
        }
        if (child->is_leaf()) {
            proof.terminal = PathProof::Terminal::Leaf;
            proof.leaf_key = child->key;
            proof.leaf_account = child->account;
            return proof;
        }
        node = child;
    }
    throw std::logic_error("verkle: proof walk exceeded maximum depth");
}

VerkleTree VerkleTree::clone() const {
    VerkleTree out(params_);
    clone_into(root_.get(), out.root_);
    out.leaf_count_ = leaf_count_;
    return out;
}

bool VerkleTree::check_cached_commitments() const { return check_node(*params_, root_.get()); }

bool verify_path(const kzg::KzgParams& params, const kzg::Scalar& root_digest, const Key& key,
                 const std::optional<Account>& account, const PathProof& proof) {
    if (proof.levels.empty() || proof.levels.size() > kMaxDepth) return false;
    if (node_digest(proof.levels[0].commitment) != root_digest) return false;

    for (size_t i = 0; i < proof.levels.size(); ++i) {
        const ProofLevel& level = proof.levels[i];
        if (level.nibble != nibble_at(key, i)) return false;
        if (!kzg::verify_eval(params, kzg::Commitment{level.commitment},
                              kzg::Scalar::from_u64(level.nibble), level.child_digest,
                              level.witness))
            return false;
        if (i + 1 < proof.levels.size() &&
            level.child_digest != node_digest(proof.levels[i + 1].commitment))
            return false;
    }

    const kzg::Scalar& last = proof.levels.back().child_digest;
    if (proof.terminal == PathProof::Terminal::Empty) {
        if (!last.is_zero()) return false;
        return !account.has_value();
    }
    // leaf terminal: the digest binds (key, account); the leaf's own key must
    // follow the proven path prefix
    if (last != leaf_digest(proof.leaf_key, proof.leaf_account)) return false;
    for (size_t i = 0; i < proof.levels.size(); ++i) {
        if (nibble_at(proof.leaf_key, i) != nibble_at(key, i)) return false;
    }
    if (proof.leaf_key == key) return account.has_value() && *account == proof.leaf_account;
    return !account.has_value();
}

}  // namespace sn::verkle
