#include "sendingnet/identity.hpp"

#include "sendingnet/bytes.hpp"

namespace sn::identity {

namespace {

bn::Fr fr_from_digest(const Digest& d) {
    bn::U256 n{};
    for (int i = 0; i < 4; ++i) {
        uint64_t limb = 0;
        for (int b = 0; b < 8; ++b) limb = (limb << 8) | d[i * 8 + b];
        n.w[3 - i] = limb;
    }
    return bn::Fr::from_u256(n);
}

Digest challenge_digest(const std::array<uint8_t, 33>& commitment, const bn::G1& pub,
                        const Digest& digest) {
    ByteWriter w;
    w.raw(commitment);
    w.raw(bn::g1_to_bytes(pub));
    w.raw(digest);
    return sha256_labeled("sig-challenge", w.bytes());
}

}  // namespace

KeyPair KeyPair::random(Rng& rng) {
    for (;;) {
        std::array<uint8_t, 32> buf{};
        rng.fill(buf);
        Digest d{};
        std::copy(buf.begin(), buf.end(), d.begin());
        bn::Fr secret = fr_from_digest(d);
        if (!secret.is_zero()) return from_secret(secret);
    }
}

Address address_of(const bn::G1& pub) {
    auto enc = bn::g1_to_bytes(pub);
    Digest d = sha256(std::span<const uint8_t>(enc.data(), enc.size()));
    Address out{};
    std::copy(d.begin() + 12, d.end(), out.begin());
    return out;
}

std::string address_hex(const Address& addr) {
    return to_hex(std::span<const uint8_t>(addr.data(), addr.size()));
}

std::optional<Signature> Signature::from_bytes(std::span<const uint8_t> in) {
    if (in.size() != 65) return std::nullopt;
    Signature s;
    std::copy(in.begin(), in.begin() + 33, s.commitment.begin());
    std::copy(in.begin() + 33, in.end(), s.response.begin());
    return s;
}

Signature sign_digest(const bn::Fr& secret, const Digest& digest) {
    ByteWriter seed;
    seed.raw(secret.to_bytes());
    seed.raw(digest);
    uint8_t counter = 0;
    bn::Fr k;
    do {
        ByteWriter w;
        w.raw(seed.bytes());
        w.u8(counter++);
        k = fr_from_digest(sha256_labeled("sig-nonce", w.bytes()));
    } while (k.is_zero());

    Signature sig;
    sig.commitment = bn::g1_to_bytes(bn::G1::generator().mul(k));
    bn::G1 pub = bn::G1::generator().mul(secret);
    bn::Fr c = fr_from_digest(challenge_digest(sig.commitment, pub, digest));
    sig.response = (k + c * secret).to_bytes();
    return sig;
}

bool verify_digest(const bn::G1& pub, const Digest& digest, const Signature& sig) {
    auto r_point = bn::g1_from_bytes(sig.commitment);
    if (!r_point) return false;
    auto s = bn::Fr::from_bytes(sig.response);
    if (!s) return false;
    bn::Fr c = fr_from_digest(challenge_digest(sig.commitment, pub, digest));
    // s*g == R + c*pub
    bn::G1 lhs = bn::G1::generator().mul(*s);
    bn::G1 rhs = r_point->add(pub.mul(c));
    return lhs == rhs;
}

Bytes DidDocument::core_bytes() const {
    ByteWriter w;
    w.raw(std::span<const uint8_t>(master_address.data(), master_address.size()));
    w.raw(bn::g1_to_bytes(device_public));
    w.u64(issued_at);
    return w.take();
}

Bytes DidDocument::to_bytes() const {
    ByteWriter w;
    w.raw(std::span<const uint8_t>(master_address.data(), master_address.size()));
    w.raw(bn::g1_to_bytes(master_public));
    w.raw(bn::g1_to_bytes(device_public));
    w.u64(issued_at);
    w.raw(controller_signature.to_bytes());
    w.raw(key_signature.to_bytes());
    return w.take();
}

std::optional<DidDocument> DidDocument::from_bytes(std::span<const uint8_t> in) {
    try {
        ByteReader r(in);
        DidDocument doc;
        doc.master_address = r.fixed<20>();
        auto master = bn::g1_from_bytes(r.fixed<33>());
        auto device = bn::g1_from_bytes(r.fixed<33>());
        if (!master || !device) return std::nullopt;
        doc.master_public = *master;
        doc.device_public = *device;
        doc.issued_at = r.u64();
        auto csig = Signature::from_bytes(r.raw(65));
        auto ksig = Signature::from_bytes(r.raw(65));
        if (!csig || !ksig || !r.done()) return std::nullopt;
        doc.controller_signature = *csig;
        doc.key_signature = *ksig;
        return doc;
    } catch (const std::out_of_range&) {
        return std::nullopt;
    }
}

DidDocument issue_did(const KeyPair& master, const KeyPair& device, uint64_t issued_at) {
    DidDocument doc;
    doc.master_address = address_of(master.pub);
    doc.master_public = master.pub;
    doc.device_public = device.pub;
    doc.issued_at = issued_at;
    doc.controller_signature = sign_digest(master.secret, sha256(doc.core_bytes()));

    ByteWriter w;
    w.raw(doc.core_bytes());
    w.raw(doc.controller_signature.to_bytes());
    doc.key_signature = sign_digest(device.secret, sha256(w.bytes()));
    return doc;
}

bool verify_did(const DidDocument& doc) {
    if (address_of(doc.master_public) != doc.master_address) return false;
    Digest core = sha256(doc.core_bytes());
    if (!verify_digest(doc.master_public, core, doc.controller_signature)) return false;
    ByteWriter w;
    w.raw(doc.core_bytes());
    w.raw(doc.controller_signature.to_bytes());
    return verify_digest(doc.device_public, sha256(w.bytes()), doc.key_signature);
}

bool Registry::publish(const DidDocument& doc) {
    if (!verify_did(doc)) return false;
    docs_[doc.master_address] = doc;
    return true;
}

const DidDocument* Registry::lookup(const Address& master) const {
    auto it = docs_.find(master);
    return it == docs_.end() ? nullptr : &it->second;
}

}  // namespace sn::identity
