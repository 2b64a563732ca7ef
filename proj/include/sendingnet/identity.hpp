#pragma once

#include <array>
#include <map>
#include <optional>

#include "sendingnet/hash.hpp"
#include "sendingnet/pairing/curves.hpp"
#include "sendingnet/rng.hpp"

namespace sn::identity {

/// 20-byte account identifier derived from a public key.
using Address = std::array<uint8_t, 20>;

struct KeyPair {
    bn::Fr secret;
    bn::G1 pub;

    static KeyPair from_secret(const bn::Fr& secret) {
        return {secret, bn::G1::generator().mul(secret)};
    }
    static KeyPair random(Rng& rng);
};

Address address_of(const bn::G1& pub);
std::string address_hex(const Address& addr);

/// Schnorr signature with a nonce derived deterministically from
/// (secret, digest); identical inputs yield identical bytes.
struct Signature {
    std::array<uint8_t, 33> commitment;  // R, compressed
    std::array<uint8_t, 32> response;    // s

    Bytes to_bytes() const {
        Bytes out(commitment.begin(), commitment.end());
        out.insert(out.end(), response.begin(), response.end());
        return out;
    }
    static std::optional<Signature> from_bytes(std::span<const uint8_t> in);

    bool operator==(const Signature& o) const {
        return commitment == o.commitment && response == o.response;
    }
};

Signature sign_digest(const bn::Fr& secret, const Digest& digest);
bool verify_digest(const bn::G1& pub, const Digest& digest, const Signature& sig);

inline Signature sign_event(const KeyPair& device, const Digest& digest) {
    return sign_digest(device.secret, digest);
}
inline bool verify_event(const bn::G1& pub, const Digest& digest, const Signature& sig) {
    return verify_digest(pub, digest, sig);
}

/// Binds a master wallet key to a per-device session key. The master signs
/// the document core; the device key signs last, covering the controller
/// signature.
struct DidDocument {
    Address master_address;
    bn::G1 master_public;
    bn::G1 device_public;
    uint64_t issued_at = 0;
    Signature controller_signature;
    Signature key_signature;

    /// Canonical core: master_address || device_public || issued_at.
    Bytes core_bytes() const;
    Bytes to_bytes() const;
    static std::optional<DidDocument> from_bytes(std::span<const uint8_t> in);
};

DidDocument issue_did(const KeyPair& master, const KeyPair& device, uint64_t issued_at);
bool verify_did(const DidDocument& doc);

/// In-memory DID resolution, the role an edge node plays for lookups.
class Registry {
public:
    /// Returns false (and stores nothing) when the document fails verification.
    bool publish(const DidDocument& doc);
    const DidDocument* lookup(const Address& master) const;
    size_t size() const { return docs_.size(); }

private:
    std::map<Address, DidDocument> docs_;
};

}  // namespace sn::identity
