#include "sendingnet/por.hpp"

#include <algorithm>

namespace sn::por {

const char* error_name(Error e) {
    switch (e) {
        case Error::None: return "ok";
        case Error::NotAMember: return "not-a-member";
        case Error::NotARecipient: return "not-a-recipient";
        case Error::BadOutboundSignature: return "bad-outbound-signature";
        case Error::BadRelaySignature: return "bad-relay-signature";
        case Error::MissingRelaySignature: return "missing-relay-signature";
        case Error::BadChainSignature: return "bad-chain-signature";
        case Error::ReplayedEvent: return "replayed-event";
        case Error::BadInboundSignature: return "bad-inbound-signature";
        case Error::MissingEvents: return "missing-events";
        case Error::UnknownEvents: return "unknown-events";
        case Error::RootMismatch: return "root-mismatch";
        case Error::BadBillSignature: return "bad-bill-signature";
        case Error::EpochFull: return "epoch-full";
        case Error::EpochNotSealed: return "epoch-not-sealed";
        case Error::EmptyEpoch: return "empty-epoch";
    }
    return "unknown";
}

Digest chain_link_digest(const EventId& event_id, const identity::Signature& prev,
                         const bn::G1& next_hop_pub) {
    ByteWriter w;
    w.raw(event_id);
    w.raw(prev.to_bytes());
    w.raw(bn::g1_to_bytes(next_hop_pub));
    return sha256(w.bytes());
}

Bytes RelayEnvelope::outbound_body() const {
    ByteWriter w;
    w.raw(event_id);
    w.u64(message_size);
    return w.take();
}

Bytes RelayEnvelope::relay_body() const {
    ByteWriter w;
    w.raw(outbound_body());
    w.raw(sig_out.to_bytes());
    return w.take();
}

RelayEnvelope assemble_outbound(const EventId& event_id, std::span<const uint8_t> payload,
                                const identity::Address& sender, const std::string& outbound_node,
                                const identity::KeyPair& outbound_key) {
    RelayEnvelope env;
    env.event_id = event_id;
    env.message_size = payload.size();
    env.sender = sender;
    env.outbound_node = outbound_node;
    env.sig_out = identity::sign_digest(outbound_key.secret, sha256(env.outbound_body()));
    return env;
}

Error relay_endorse(RelayEnvelope& env, const RoomMembership& room, const bn::G1& outbound_pub,
                    const identity::KeyPair& relay_key, const std::string& next_hop,
                    const bn::G1& next_hop_pub) {
    if (!room.contains(env.sender)) return Error::NotAMember;
    if (!identity::verify_digest(outbound_pub, sha256(env.outbound_body()), env.sig_out))
        return Error::BadOutboundSignature;

    env.sig_relay = identity::sign_digest(relay_key.secret, sha256(env.relay_body()));
    env.next_hop = next_hop;

    ChainLink link;
    link.hop_index = static_cast<uint32_t>(env.chain.size());
    const identity::Signature& prev =
        env.chain.empty() ? env.sig_out : env.chain.back().sig;
    link.sig = identity::sign_digest(relay_key.secret,
                                     chain_link_digest(env.event_id, prev, next_hop_pub));
    env.chain.push_back(link);
    return Error::None;
}

bool verify_chain(const RelayEnvelope& env, std::span<const bn::G1> hop_pubs,
                  std::span<const bn::G1> next_hop_pubs) {
    if (env.chain.size() != hop_pubs.size() || env.chain.size() != next_hop_pubs.size())
        return false;
    for (size_t i = 0; i < env.chain.size(); ++i) {
        if (env.chain[i].hop_index != i) return false;
        const identity::Signature& prev = i == 0 ? env.sig_out : env.chain[i - 1].sig;
        Digest d = chain_link_digest(env.event_id, prev, next_hop_pubs[i]);
        if (!identity::verify_digest(hop_pubs[i], d, env.chain[i].sig)) return false;
    }
    return true;
}

Error inbound_accept(InboundBatch& batch, const RelayEnvelope& env, const RoomMembership& room,
                     const identity::Address& recipient, const bn::G1& outbound_pub,
                     const bn::G1& relay_pub, const bn::G1& inbound_pub) {
    if (!room.contains(recipient)) return Error::NotARecipient;
    if (!room.contains(env.sender)) return Error::NotAMember;
    if (!identity::verify_digest(outbound_pub, sha256(env.outbound_body()), env.sig_out))
        return Error::BadOutboundSignature;
    if (!env.sig_relay) return Error::MissingRelaySignature;
    if (!identity::verify_digest(relay_pub, sha256(env.relay_body()), *env.sig_relay))
        return Error::BadRelaySignature;
    bn::G1 hops[] = {relay_pub};
    bn::G1 nexts[] = {inbound_pub};
    if (!verify_chain(env, hops, nexts)) return Error::BadChainSignature;
    if (batch.seen.count(env.event_id) > 0) return Error::ReplayedEvent;

    batch.seen.insert(env.event_id);
    batch.leaves.emplace_back(env.event_id, env.message_size);
    return Error::None;
}

Bytes RelayReceipt::signed_body() const {
    ByteWriter w;
    w.str(outbound_node);
    w.str(relay_node);
    w.str(inbound_node);
    w.u32(static_cast<uint32_t>(event_ids.size()));
    for (const auto& id : event_ids) w.raw(id);
    w.u64(cost_coefficient_milli);
    w.raw(merkle_root);
    return w.take();
}

std::optional<RelayReceipt> build_receipt(InboundBatch& batch, size_t threshold, bool timer_fired,
                                          uint64_t cost_coefficient_milli,
                                          const identity::KeyPair& inbound_key) {
    if (batch.leaves.empty()) return std::nullopt;
    if (batch.leaves.size() < threshold && !timer_fired) return std::nullopt;

    RelayReceipt receipt;
    receipt.outbound_node = batch.outbound_node;
    receipt.relay_node = batch.relay_node;
    receipt.inbound_node = batch.inbound_node;
    receipt.cost_coefficient_milli = cost_coefficient_milli;
    receipt.merkle_root = merkle::receipt_root(batch.leaves);
    for (const auto& [id, size] : batch.leaves) receipt.event_ids.push_back(id);
    std::sort(receipt.event_ids.begin(), receipt.event_ids.end());
    receipt.sig_in = identity::sign_digest(inbound_key.secret, sha256(receipt.signed_body()));

    batch.leaves.clear();
    return receipt;
}

Bytes RelayBill::signed_body() const {
    ByteWriter w;
    w.str(outbound_node);
    w.str(relay_node);
    w.u32(static_cast<uint32_t>(segments.size()));
    for (const auto& seg : segments) {
        w.raw(seg.receipt_root);
        w.u32(static_cast<uint32_t>(seg.lines.size()));
        for (const auto& line : seg.lines) {
            w.raw(line.event_id);
            w.u64(line.message_size);
            w.u64(line.cost_coefficient_milli);
        }
    }
    w.u64(total_milli);
    return w.take();
}

uint64_t RelayBill::recompute_total() const {
    uint64_t total = 0;
    for (const auto& seg : segments) {
        for (const auto& line : seg.lines) total += line.message_size * line.cost_coefficient_milli;
    }
    return total;
}

BillResult compile_bill(std::span<const RelayReceipt> receipts, const RelayLedger& ledger,
                        const bn::G1& inbound_pub, const identity::KeyPair& relay_key) {
    BillResult out;
    std::set<EventId> covered;
    for (const RelayReceipt& receipt : receipts) {
        if (!identity::verify_digest(inbound_pub, sha256(receipt.signed_body()), receipt.sig_in)) {
            out.error = Error::BadInboundSignature;
            return out;
        }
        BillSegment seg;
        seg.receipt_root = receipt.merkle_root;
        for (const EventId& id : receipt.event_ids) {
            auto it = ledger.forwarded.find(id);
            if (it == ledger.forwarded.end()) {
                out.error = Error::UnknownEvents;
                return out;
            }
            covered.insert(id);
            seg.lines.push_back({id, it->second, receipt.cost_coefficient_milli});
        }
        out.bill.segments.push_back(std::move(seg));
    }
    if (covered.size() != ledger.forwarded.size()) {
        out.error = Error::MissingEvents;
        return out;
    }
    if (!receipts.empty()) {
        out.bill.outbound_node = receipts[0].outbound_node;
        out.bill.relay_node = receipts[0].relay_node;
    }
    out.bill.total_milli = out.bill.recompute_total();
    out.bill.sig_relay = identity::sign_digest(relay_key.secret, sha256(out.bill.signed_body()));
    return out;
}

Error outbound_endorse(RelayBill& bill, const RelayLedger& own_ledger, const bn::G1& relay_pub,
                       const identity::KeyPair& outbound_key) {
    if (!identity::verify_digest(relay_pub, sha256(bill.signed_body()), bill.sig_relay))
        return Error::BadBillSignature;
    if (bill.total_milli != bill.recompute_total()) return Error::RootMismatch;
    for (const auto& seg : bill.segments) {
        std::vector<std::pair<Digest, uint64_t>> entries;
        for (const auto& line : seg.lines) {
            auto it = own_ledger.forwarded.find(line.event_id);
            if (it == own_ledger.forwarded.end()) return Error::UnknownEvents;
            if (it->second != line.message_size) return Error::RootMismatch;
            entries.emplace_back(line.event_id, line.message_size);
        }
        if (merkle::receipt_root(entries) != seg.receipt_root) return Error::RootMismatch;
    }
    ByteWriter w;
    w.raw(bill.signed_body());
    w.raw(bill.sig_relay.to_bytes());
    bill.sig_out_endorsement = identity::sign_digest(outbound_key.secret, sha256(w.bytes()));
    return Error::None;
}

bool verify_bill_signatures(const RelayBill& bill, const bn::G1& relay_pub,
                            const bn::G1& outbound_pub) {
    if (!identity::verify_digest(relay_pub, sha256(bill.signed_body()), bill.sig_relay))
        return false;
    if (!bill.sig_out_endorsement) return false;
    ByteWriter w;
    w.raw(bill.signed_body());
    w.raw(bill.sig_relay.to_bytes());
    return identity::verify_digest(outbound_pub, sha256(w.bytes()), *bill.sig_out_endorsement);
}

// ------------------------------------------------------------------- epochs

WorkloadEpoch epoch_begin(const kzg::KzgParams& params, uint64_t number) {
    WorkloadEpoch epoch;
    epoch.number = number;
    epoch.slots.assign(params.n, kzg::Scalar::zero());
    epoch.running = kzg::Commitment{group::GroupElement::identity()};
    return epoch;
}

kzg::Scalar slot_digest(const EventId& event_id, const identity::Signature& sig_relay) {
    ByteWriter w;
    w.raw(event_id);
    w.raw(sig_relay.to_bytes());
    Digest d = sha256_labeled("workload-slot", w.bytes());
    return kzg::Scalar::from_digest(d);
}

Error record_relay(const kzg::KzgParams& params, WorkloadEpoch& epoch, const RelayEnvelope& env) {
    if (!env.sig_relay) return Error::MissingRelaySignature;
    if (epoch.sealed || epoch.fill >= epoch.slots.size()) return Error::EpochFull;
    size_t slot = epoch.fill;
    kzg::Scalar digest = slot_digest(env.event_id, *env.sig_relay);
    epoch.slots[slot] = digest;
    epoch.running = kzg::update_commitment(params, epoch.running, slot, digest);
    epoch.fill += 1;
    return Error::None;
}

void seal_epoch(WorkloadEpoch& epoch) { epoch.sealed = true; }

WorkloadProofResult prove_workload(const kzg::KzgParams& params, const WorkloadEpoch& epoch,
                                   uint64_t sample_seed) {
    WorkloadProofResult out;
    if (!epoch.sealed) {
        out.error = Error::EpochNotSealed;
        return out;
    }
    if (epoch.fill == 0) {
        out.error = Error::EmptyEpoch;
        return out;
    }
    size_t s = std::min<size_t>(16, epoch.fill);
    std::vector<uint32_t> filled(epoch.fill);
    for (size_t i = 0; i < epoch.fill; ++i) filled[i] = static_cast<uint32_t>(i);
    Rng rng(sample_seed);
    for (size_t i = 0; i < s; ++i) {
        size_t j = i + static_cast<size_t>(rng.below(filled.size() - i));
        std::swap(filled[i], filled[j]);
    }
    filled.resize(s);
    std::sort(filled.begin(), filled.end());

    out.proof.epoch = epoch.number;
    out.proof.commitment = epoch.running;
    out.proof.proof = kzg::prove_subvector(params, epoch.slots, filled);
    return out;
}

bool verify_workload(const kzg::KzgParams& params, const WorkloadProof& proof) {
    return kzg::verify_subvector(params, proof.commitment, proof.proof.indices, proof.proof.values,
                                 proof.proof.witness);
}

}  // namespace sn::por
