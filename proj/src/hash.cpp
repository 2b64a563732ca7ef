#include "sendingnet/hash.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace sn {

Digest sha256(std::span<const uint8_t> data) {
    Digest out{};
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    if (ctx == nullptr) throw std::runtime_error("EVP_MD_CTX_new failed");
    bool ok = EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) == 1 &&
              EVP_DigestUpdate(ctx, data.data(), data.size()) == 1 &&
              EVP_DigestFinal_ex(ctx, out.data(), &len) == 1;
    EVP_MD_CTX_free(ctx);
    if (!ok || len != out.size()) throw std::runtime_error("sha256 failed");
    return out;
}

Digest sha256(const Bytes& data) { return sha256(std::span<const uint8_t>(data)); }

Digest sha256(const std::string& data) {
    return sha256(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(data.data()), data.size()));
}

Digest sha256_labeled(const std::string& label, std::span<const uint8_t> data) {
    Bytes buf;
    buf.reserve(label.size() + 1 + data.size());
    buf.insert(buf.end(), label.begin(), label.end());
    buf.push_back(0);
    buf.insert(buf.end(), data.begin(), data.end());
    return sha256(buf);
}

}  // namespace sn
