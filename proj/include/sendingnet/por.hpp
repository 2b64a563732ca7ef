#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sendingnet/identity.hpp"
#include "sendingnet/kzg.hpp"
#include "sendingnet/merkle.hpp"

namespace sn::por {

using EventId = Digest;

enum class Error {
    None,
    NotAMember,
    NotARecipient,
    BadOutboundSignature,
    BadRelaySignature,
    MissingRelaySignature,
    BadChainSignature,
    ReplayedEvent,
    BadInboundSignature,
    MissingEvents,
    UnknownEvents,
    RootMismatch,
    BadBillSignature,
    EpochFull,
    EpochNotSealed,
    EmptyEpoch,
};

const char* error_name(Error e);

/// Per-hop link of the chained signature: hop i signs
/// H(event_id || previous signature || next hop public key), where hop 0's
/// previous signature is sig_out. Verifiable only with the ordered hop list.
struct ChainLink {
    uint32_t hop_index = 0;
    identity::Signature sig;
};

Digest chain_link_digest(const EventId& event_id, const identity::Signature& prev,
                         const bn::G1& next_hop_pub);

/// [EventID + MessageSize]Sig_out, later endorsed by the relay. The sender
/// address and node ids ride along for membership checks and routing.
struct RelayEnvelope {
    EventId event_id{};
    uint64_t message_size = 0;
    identity::Address sender{};
    std::string outbound_node;
    std::string next_hop;
    identity::Signature sig_out;
    std::optional<identity::Signature> sig_relay;
    std::vector<ChainLink> chain;

    /// Body covered by sig_out: event_id || message_size_be64.
    Bytes outbound_body() const;
    /// Body covered by sig_relay: outbound_body || sig_out.
    Bytes relay_body() const;
};

struct RoomMembership {
    std::set<identity::Address> members;
    bool contains(const identity::Address& a) const { return members.count(a) > 0; }
};

RelayEnvelope assemble_outbound(const EventId& event_id, std::span<const uint8_t> payload,
                                const identity::Address& sender, const std::string& outbound_node,
                                const identity::KeyPair& outbound_key);

/// Relay-side verification and endorsement (adds sig_relay and the first
/// chain link bound to the next hop's key).
Error relay_endorse(RelayEnvelope& env, const RoomMembership& room, const bn::G1& outbound_pub,
                    const identity::KeyPair& relay_key, const std::string& next_hop,
                    const bn::G1& next_hop_pub);

bool verify_chain(const RelayEnvelope& env, std::span<const bn::G1> hop_pubs,
                  std::span<const bn::G1> next_hop_pubs);

/// Batch of accepted leaves held by an inbound node for one
/// (outbound, relay) stream.
struct InboundBatch {
    std::string outbound_node;
    std::string relay_node;
    std::string inbound_node;
    std::vector<std::pair<EventId, uint64_t>> leaves;
    std::set<EventId> seen;
};

Error inbound_accept(InboundBatch& batch, const RelayEnvelope& env, const RoomMembership& room,
                     const identity::Address& recipient, const bn::G1& outbound_pub,
                     const bn::G1& relay_pub, const bn::G1& inbound_pub);

/// [OutboundNodeID, EventIDs, CostCoefficient, MerkleRoot]Sig_in.
/// cost_coefficient is fixed-point with 3 decimal places (1000 = 1.000).
struct RelayReceipt {
    std::string outbound_node;
    std::string relay_node;
    std::string inbound_node;
    std::vector<EventId> event_ids;  // sorted
    uint64_t cost_coefficient_milli = 1000;
    Digest merkle_root{};
    identity::Signature sig_in;

    Bytes signed_body() const;
};

/// Emits a receipt once the batch reaches `threshold` leaves or the window
/// timer fires; otherwise pending (nullopt). The batch is drained on emit.
std::optional<RelayReceipt> build_receipt(InboundBatch& batch, size_t threshold, bool timer_fired,
                                          uint64_t cost_coefficient_milli,
                                          const identity::KeyPair& inbound_key);

struct BillLine {
    EventId event_id{};
    uint64_t message_size = 0;
    uint64_t cost_coefficient_milli = 1000;
};

/// One billed receipt window; merkle_root must equal the receipt's root.
struct BillSegment {
    Digest receipt_root{};
    std::vector<BillLine> lines;
};

struct RelayBill {
    std::string outbound_node;
    std::string relay_node;
    std::vector<BillSegment> segments;
    uint64_t total_milli = 0;  // sum of message_size * coefficient
    identity::Signature sig_relay;
    std::optional<identity::Signature> sig_out_endorsement;

    Bytes signed_body() const;
    uint64_t recompute_total() const;
};

/// Relay-side ledger of what it actually forwarded, keyed by event id.
struct RelayLedger {
    std::map<EventId, uint64_t> forwarded;  // event_id -> message_size
};

struct BillResult {
    RelayBill bill;
    Error error = Error::None;
    bool ok() const { return error == Error::None; }
};

BillResult compile_bill(std::span<const RelayReceipt> receipts, const RelayLedger& ledger,
                        const bn::G1& inbound_pub, const identity::KeyPair& relay_key);

/// Outbound verification of the compiled bill: relay signature, per-segment
/// Merkle roots recomputed from the lines, and line sizes cross-checked
/// against the outbound node's own ledger.
Error outbound_endorse(RelayBill& bill, const RelayLedger& own_ledger, const bn::G1& relay_pub,
                       const identity::KeyPair& outbound_key);

bool verify_bill_signatures(const RelayBill& bill, const bn::G1& relay_pub,
                            const bn::G1& outbound_pub);

// ---------------------------------------------------------------------------
// Workload epochs: vector slot i holds the digest of the i-th relayed
// message, committed incrementally through the homomorphic update.

struct WorkloadEpoch {
    uint64_t number = 0;
    std::vector<kzg::Scalar> slots;
    kzg::Commitment running;
    size_t fill = 0;
    bool sealed = false;
};

WorkloadEpoch epoch_begin(const kzg::KzgParams& params, uint64_t number);

/// Slot digest binds the relay's own endorsement: H(event_id || sig_relay),
/// reduced into the scalar field.
kzg::Scalar slot_digest(const EventId& event_id, const identity::Signature& sig_relay);

Error record_relay(const kzg::KzgParams& params, WorkloadEpoch& epoch, const RelayEnvelope& env);

void seal_epoch(WorkloadEpoch& epoch);

struct WorkloadProof {
    uint64_t epoch = 0;
    kzg::Commitment commitment;
    kzg::SubvectorProof proof;
};

/// Samples min(16, fill) distinct filled slots from the seed and proves them.
struct WorkloadProofResult {
    WorkloadProof proof;
    Error error = Error::None;
    bool ok() const { return error == Error::None; }
};

WorkloadProofResult prove_workload(const kzg::KzgParams& params, const WorkloadEpoch& epoch,
                                   uint64_t sample_seed);

bool verify_workload(const kzg::KzgParams& params, const WorkloadProof& proof);

}  // namespace sn::por
