#include "sendingnet/aead.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace sn {

namespace {
constexpr size_t kTagLen = 16;

struct CipherCtx {
    EVP_CIPHER_CTX* ctx;
    CipherCtx() : ctx(EVP_CIPHER_CTX_new()) {
        if (ctx == nullptr) throw std::runtime_error("EVP_CIPHER_CTX_new failed");
    }
    ~CipherCtx() { EVP_CIPHER_CTX_free(ctx); }
};
}  // namespace

Bytes aead_seal(const AeadKey& key, const AeadNonce& nonce, std::span<const uint8_t> plaintext,
                std::span<const uint8_t> aad) {
    CipherCtx c;
    if (EVP_EncryptInit_ex(c.ctx, EVP_aes_256_gcm(), nullptr, key.data(), nonce.data()) != 1)
        throw std::runtime_error("gcm init failed");
    int len = 0;
    if (!aad.empty() && EVP_EncryptUpdate(c.ctx, nullptr, &len, aad.data(), static_cast<int>(aad.size())) != 1)
        throw std::runtime_error("gcm aad failed");
    Bytes out(plaintext.size() + kTagLen);
    if (EVP_EncryptUpdate(c.ctx, out.data(), &len, plaintext.data(), static_cast<int>(plaintext.size())) != 1)
        throw std::runtime_error("gcm encrypt failed");
    int total = len;
    if (EVP_EncryptFinal_ex(c.ctx, out.data() + total, &len) != 1)
        throw std::runtime_error("gcm final failed");
    total += len;
    if (EVP_CIPHER_CTX_ctrl(c.ctx, EVP_CTRL_GCM_GET_TAG, kTagLen, out.data() + total) != 1)
        throw std::runtime_error("gcm tag failed");
    out.resize(total + kTagLen);
    return out;
}

std::optional<Bytes> aead_open(const AeadKey& key, const AeadNonce& nonce,
                               std::span<const uint8_t> ciphertext, std::span<const uint8_t> aad) {
    if (ciphertext.size() < kTagLen) return std::nullopt;
    size_t body = ciphertext.size() - kTagLen;
    CipherCtx c;
    if (EVP_DecryptInit_ex(c.ctx, EVP_aes_256_gcm(), nullptr, key.data(), nonce.data()) != 1)
        return std::nullopt;
    int len = 0;
    if (!aad.empty() && EVP_DecryptUpdate(c.ctx, nullptr, &len, aad.data(), static_cast<int>(aad.size())) != 1)
        return std::nullopt;
    Bytes out(body);
    if (body > 0 &&
        EVP_DecryptUpdate(c.ctx, out.data(), &len, ciphertext.data(), static_cast<int>(body)) != 1)
        return std::nullopt;
    int total = len;
    uint8_t tag[kTagLen];
    std::copy(ciphertext.begin() + body, ciphertext.end(), tag);
    if (EVP_CIPHER_CTX_ctrl(c.ctx, EVP_CTRL_GCM_SET_TAG, kTagLen, tag) != 1) return std::nullopt;
    if (EVP_DecryptFinal_ex(c.ctx, out.data() + total, &len) != 1) return std::nullopt;
    out.resize(total + len);
    return out;
}

}  // namespace sn
