#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "sendingnet/por.hpp"
#include "sendingnet/verkle.hpp"

namespace sn::poa {

/// Stake plus the recent-epoch availability window ("was an accepted
/// Proof-of-Relay submitted") per node.
class StakeRegistry {
public:
    explicit StakeRegistry(size_t window = 32) : window_(window) {}

    void set_stake(const std::string& node, uint64_t stake);
    void record_epoch(const std::string& node, bool accepted_por);

    uint64_t stake(const std::string& node) const;

    /// Fraction of the last min(window, observed) epochs with an accepted
    /// submission; 0 when no history.
    double availability_score(const std::string& node) const;

    /// stake * availability, in thousandths (exact when the window divides
    /// evenly; used as the selection weight).
    uint64_t weight_milli(const std::string& node) const;

    std::vector<std::string> node_ids() const;  // sorted
    size_t window() const { return window_; }

private:
    struct Entry {
        uint64_t stake = 0;
        std::deque<bool> history;
    };
    size_t window_;
    std::map<std::string, Entry> nodes_;
};

struct RandaoState {
    uint64_t epoch = 0;
    Digest seed{};
};

RandaoState randao_genesis();

/// A validator's reveal: its deterministic signature over the epoch number.
Bytes randao_reveal(const identity::KeyPair& validator, uint64_t epoch);

/// Hash-mix of reveals in node-id order.
RandaoState randao_advance(const RandaoState& state,
                           const std::map<std::string, Bytes>& reveals);

/// Weighted draw on the cumulative weight line over nodes sorted by id;
/// deterministic per seed. Empty registry or all-zero weights is an error.
std::optional<std::string> select_validator(const StakeRegistry& registry,
                                            const RandaoState& randao);

// ---------------------------------------------------------------------------
// Proof-of-Relay assessment

struct Submission {
    std::string relay_node;
    std::string outbound_node;
    std::string inbound_node;
    por::WorkloadProof workload;
    por::RelayBill bill;
    std::vector<por::RelayReceipt> receipts;

    Bytes to_bytes() const;
};

/// Public keys for every node id the consensus layer can encounter.
using NodeDirectory = std::map<std::string, bn::G1>;

struct AssessOutcome {
    bool accepted = false;
    por::Error reason = por::Error::None;
    uint64_t credited_milli = 0;
};

/// accept iff the workload subvector proof verifies, the bill signatures
/// verify, every bill segment's Merkle root matches a signed receipt, and no
/// covered event id was credited before.
AssessOutcome assess_por(const kzg::KzgParams& params, const Submission& submission,
                         const NodeDirectory& directory,
                         const std::set<por::EventId>& already_credited);

// ---------------------------------------------------------------------------
// Chain

struct Block {
    uint64_t height = 0;
    Digest parent{};
    std::string validator;
    Bytes randao_reveal;
    std::vector<Submission> accepted;
    std::array<uint8_t, 32> state_root{};
    identity::Signature signature;

    Bytes signed_body() const;
    Digest digest() const;
};

/// Single-proposer chain: the registry picks one validator per height, the
/// validator assesses submissions, credits relay accounts in the Verkle tree,
/// and seals the block. Followers replay the same inputs and must reach the
/// identical state root.
class Chain {
public:
    Chain(std::shared_ptr<const kzg::KzgParams> verkle_params, StakeRegistry registry);

    const StakeRegistry& registry() const { return registry_; }
    StakeRegistry& registry() { return registry_; }
    const verkle::VerkleTree& state() const { return state_; }
    const std::vector<Block>& blocks() const { return blocks_; }
    const RandaoState& randao() const { return randao_; }

    std::optional<std::string> next_validator() const;

    /// Produces and appends the next block. Fails (nullopt) when `producer`
    /// is not the selected validator.
    std::optional<Block> produce_block(const identity::KeyPair& producer_key,
                                       const std::string& producer_id,
                                       const NodeDirectory& directory,
                                       std::vector<Submission> pending);

    /// Follower-side check: re-assesses every submission and recomputes the
    /// state root from its own replica.
    bool verify_block(const Block& block, const NodeDirectory& directory) const;

    static verkle::Key account_key(const std::string& node_id);

private:
    std::shared_ptr<const kzg::KzgParams> params_;
    StakeRegistry registry_;
    verkle::VerkleTree state_;
    RandaoState randao_;
    std::vector<Block> blocks_;
    std::set<por::EventId> credited_;
};

}  // namespace sn::poa
