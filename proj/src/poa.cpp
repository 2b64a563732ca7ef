#include "sendingnet/poa.hpp"

#include <algorithm>

namespace sn::poa {

void StakeRegistry::set_stake(const std::string& node, uint64_t stake) {
    nodes_[node].stake = stake;
}

void StakeRegistry::record_epoch(const std::string& node, bool accepted_por) {
    Entry& e = nodes_[node];
    e.history.push_back(accepted_por);
    while (e.history.size() > window_) e.history.pop_front();
}

uint64_t StakeRegistry::stake(const std::string& node) const {
    auto it = nodes_.find(node);
    return it == nodes_.end() ? 0 : it->second.stake;
}

double StakeRegistry::availability_score(const std::string& node) const {
    auto it = nodes_.find(node);
    if (it == nodes_.end() || it->second.history.empty()) return 0.0;
    const auto& h = it->second.history;
    size_t accepted = static_cast<size_t>(std::count(h.begin(), h.end(), true));
    return static_cast<double>(accepted) / static_cast<double>(h.size());
}

uint64_t StakeRegistry::weight_milli(const std::string& node) const {
    auto it = nodes_.find(node);
    if (it == nodes_.end() || it->second.history.empty()) return 0;
    const auto& h = it->second.history;
    uint64_t accepted = static_cast<uint64_t>(std::count(h.begin(), h.end(), true));
    return it->second.stake * 1000 * accepted / h.size();
}

std::vector<std::string> StakeRegistry::node_ids() const {
    std::vector<std::string> out;
    out.reserve(nodes_.size());
    for (const auto& [id, _] : nodes_) out.push_back(id);
    return out;
}

RandaoState randao_genesis() {
    RandaoState s;
    s.epoch = 0;
    s.seed = sha256(std::string("randao-genesis"));
    return s;
}

Bytes randao_reveal(const identity::KeyPair& validator, uint64_t epoch) {
    ByteWriter w;
    w.u64(epoch);
    Digest d = sha256_labeled("randao-epoch", w.bytes());
    return identity::sign_digest(validator.secret, d).to_bytes();
}

RandaoState randao_advance(const RandaoState& state, const std::map<std::string, Bytes>& reveals) {
    RandaoState next;
    next.epoch = state.epoch + 1;
    Digest acc = state.seed;
    for (const auto& [node, reveal] : reveals) {  // std::map iterates in id order
        ByteWriter w;
        w.raw(acc);
        w.str(node);
        w.prefixed(reveal);
        acc = sha256(w.bytes());
    }
    next.seed = acc;
    return next;
}

std::optional<std::string> select_validator(const StakeRegistry& registry,
                                            const RandaoState& randao) {
    std::vector<std::string> ids = registry.node_ids();
    uint64_t total = 0;
    for (const auto& id : ids) total += registry.weight_milli(id);
    if (total == 0) return std::nullopt;

    // seed interpreted big-endian, reduced mod total
    unsigned __int128 acc = 0;
    for (uint8_t b : randao.seed) acc = ((acc << 8) | b) % total;
    uint64_t draw = static_cast<uint64_t>(acc);

    uint64_t cumulative = 0;
    for (const auto& id : ids) {
        cumulative += registry.weight_milli(id);
        if (draw < cumulative) return id;
    }
    return ids.back();
}

Bytes Submission::to_bytes() const {
    ByteWriter w;
    w.str(relay_node);
    w.str(outbound_node);
    w.str(inbound_node);
    w.u64(workload.epoch);
    w.prefixed(workload.commitment.point.to_bytes());
    w.u32(static_cast<uint32_t>(workload.proof.indices.size()));
    for (uint32_t i : workload.proof.indices) w.u32(i);
    for (const auto& v : workload.proof.values) w.raw(v.to_bytes());
    w.prefixed(workload.proof.witness.to_bytes());
    w.prefixed(bill.signed_body());
    w.raw(bill.sig_relay.to_bytes());
    if (bill.sig_out_endorsement) {
        w.u8(1);
        w.raw(bill.sig_out_endorsement->to_bytes());
    } else {
        w.u8(0);
    }
    w.u32(static_cast<uint32_t>(receipts.size()));
    for (const auto& receipt : receipts) {
        w.prefixed(receipt.signed_body());
        w.raw(receipt.sig_in.to_bytes());
    }
    return w.take();
}

AssessOutcome assess_por(const kzg::KzgParams& params, const Submission& submission,
                         const NodeDirectory& directory,
                         const std::set<por::EventId>& already_credited) {
    AssessOutcome out;

    auto relay_pub = directory.find(submission.relay_node);
    auto outbound_pub = directory.find(submission.outbound_node);
    auto inbound_pub = directory.find(submission.inbound_node);
    if (relay_pub == directory.end() || outbound_pub == directory.end() ||
        inbound_pub == directory.end()) {
        out.reason = por::Error::BadBillSignature;
        return out;
    }

    // (a) workload subvector proof against the epoch commitment
    if (!por::verify_workload(params, submission.workload)) {
        out.reason = por::Error::BadChainSignature;
        return out;
    }

    // (b) bill signatures: relay compilation + outbound endorsement
    if (!por::verify_bill_signatures(submission.bill, relay_pub->second, outbound_pub->second)) {
        out.reason = por::Error::BadBillSignature;
        return out;
    }
    if (submission.bill.total_milli != submission.bill.recompute_total()) {
        out.reason = por::Error::RootMismatch;
        return out;
    }

    // (c) each bill segment's root matches a receipt signed by the inbound node
    std::map<Digest, const por::RelayReceipt*> by_root;
    for (const auto& receipt : submission.receipts) {
        if (!identity::verify_digest(inbound_pub->second, sha256(receipt.signed_body()),
                                     receipt.sig_in)) {
            out.reason = por::Error::BadInboundSignature;
            return out;
        }
        by_root[receipt.merkle_root] = &receipt;
    }
    for (const auto& seg : submission.bill.segments) {
        auto it = by_root.find(seg.receipt_root);
        if (it == by_root.end()) {
            out.reason = por::Error::RootMismatch;
            return out;
        }
        std::vector<std::pair<Digest, uint64_t>> entries;
        for (const auto& line : seg.lines) entries.emplace_back(line.event_id, line.message_size);
        if (merkle::receipt_root(entries) != seg.receipt_root) {
            out.reason = por::Error::RootMismatch;
            return out;
        }
    }

    // (d) double-credit guard over event ids
    for (const auto& seg : submission.bill.segments) {
        for (const auto& line : seg.lines) {
            if (already_credited.count(line.event_id) > 0) {
                out.reason = por::Error::ReplayedEvent;
                return out;
            }
        }
    }

    out.accepted = true;
    out.credited_milli = submission.bill.total_milli;
    return out;
}

Bytes Block::signed_body() const {
    ByteWriter w;
    w.u64(height);
    w.raw(parent);
    w.str(validator);
    w.prefixed(randao_reveal);
    w.u32(static_cast<uint32_t>(accepted.size()));
    for (const auto& sub : accepted) w.prefixed(sub.to_bytes());
    w.raw(state_root);
    return w.take();
}

Digest Block::digest() const {
    ByteWriter w;
    w.raw(signed_body());
    w.raw(signature.to_bytes());
    return sha256(w.bytes());
}

Chain::Chain(std::shared_ptr<const kzg::KzgParams> verkle_params, StakeRegistry registry)
    : params_(verkle_params), registry_(std::move(registry)), state_(verkle_params),
      randao_(randao_genesis()) {}

verkle::Key Chain::account_key(const std::string& node_id) {
    Digest d = sha256_labeled("account", std::span<const uint8_t>(
                                             reinterpret_cast<const uint8_t*>(node_id.data()),
                                             node_id.size()));
    verkle::Key key{};
    std::copy(d.begin(), d.end(), key.begin());
    return key;
}

std::optional<std::string> Chain::next_validator() const {
    return select_validator(registry_, randao_);
}

std::optional<Block> Chain::produce_block(const identity::KeyPair& producer_key,
                                          const std::string& producer_id,
                                          const NodeDirectory& directory,
                                          std::vector<Submission> pending) {
    auto expected = next_validator();
    if (!expected || *expected != producer_id) return std::nullopt;

    Block block;
    block.height = blocks_.size();
    block.parent = blocks_.empty() ? Digest{} : blocks_.back().digest();
    block.validator = producer_id;
    block.randao_reveal = randao_reveal(producer_key, randao_.epoch);

    std::set<por::EventId> credited = credited_;
    for (auto& sub : pending) {
        AssessOutcome outcome = assess_por(*params_, sub, directory, credited);
        if (!outcome.accepted) continue;
        for (const auto& seg : sub.bill.segments) {
            for (const auto& line : seg.lines) credited.insert(line.event_id);
        }
        verkle::Key key = account_key(sub.relay_node);
        verkle::Account account = state_.get(key).value_or(verkle::Account{});
        account.balance += outcome.credited_milli;
        account.nonce += 1;
        state_.update(key, account);
        block.accepted.push_back(std::move(sub));
    }
    credited_ = std::move(credited);

    block.state_root = state_.root_digest().to_bytes();
    block.signature = identity::sign_digest(producer_key.secret, sha256(block.signed_body()));

    std::map<std::string, Bytes> reveals{{producer_id, block.randao_reveal}};
    randao_ = randao_advance(randao_, reveals);

    blocks_.push_back(block);
    return block;
}

bool Chain::verify_block(const Block& block, const NodeDirectory& directory) const {
    // follower view: replica state *before* the block was applied
    auto expected = next_validator();
    if (!expected || *expected != block.validator) return false;
    if (block.height != blocks_.size()) return false;
    Digest parent = blocks_.empty() ? Digest{} : blocks_.back().digest();
    if (block.parent != parent) return false;
    auto pub = directory.find(block.validator);
    if (pub == directory.end()) return false;
    if (!identity::verify_digest(pub->second, sha256(block.signed_body()), block.signature))
        return false;

    verkle::VerkleTree replica = state_.clone();
    std::set<por::EventId> credited = credited_;
    for (const auto& sub : block.accepted) {
        AssessOutcome outcome = assess_por(*params_, sub, directory, credited);
        if (!outcome.accepted) return false;
        for (const auto& seg : sub.bill.segments) {
            for (const auto& line : seg.lines) credited.insert(line.event_id);
        }
        verkle::Key key = account_key(sub.relay_node);
        verkle::Account account = replica.get(key).value_or(verkle::Account{});
        account.balance += outcome.credited_milli;
        account.nonce += 1;
        replica.update(key, account);
    }
    return replica.root_digest().to_bytes() == block.state_root;
}

bool Chain::apply_block(const Block& block, const NodeDirectory& directory) {
    if (!verify_block(block, directory)) return false;
    for (const auto& sub : block.accepted) {
        for (const auto& seg : sub.bill.segments) {
            for (const auto& line : seg.lines) credited_.insert(line.event_id);
        }
        verkle::Key key = account_key(sub.relay_node);
        verkle::Account account = state_.get(key).value_or(verkle::Account{});
        account.balance += sub.bill.total_milli;
        account.nonce += 1;
        state_.update(key, account);
    }
    std::map<std::string, Bytes> reveals{{block.validator, block.randao_reveal}};
    randao_ = randao_advance(randao_, reveals);
    blocks_.push_back(block);
    return true;
}

}  // namespace sn::poa
