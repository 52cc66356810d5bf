#include "growth/report.hpp"

#include <json.hpp>

#include <array>
#include <cstring>

namespace growth {

namespace {

// Compact SHA-256 (FIPS 180-4).
struct Sha256 {
    std::array<std::uint32_t, 8> h{0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                                   0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
    std::uint64_t total = 0;
    std::array<unsigned char, 64> buf{};
    std::size_t fill = 0;

    static std::uint32_t rotr(std::uint32_t x, int n) { return (x >> n) | (x << (32 - n)); }

    void block(const unsigned char* p) {
        static const std::uint32_t k[64] = {
            0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
            0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
            0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
            0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
            0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
            0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
            0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
            0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
            0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
            0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
            0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};
        std::uint32_t w[64];
        for (int i = 0; i < 16; ++i)
            w[i] = (std::uint32_t(p[4 * i]) << 24) | (std::uint32_t(p[4 * i + 1]) << 16) |
                   (std::uint32_t(p[4 * i + 2]) << 8) | std::uint32_t(p[4 * i + 3]);
        for (int i = 16; i < 64; ++i) {
            std::uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
            std::uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
            w[i] = w[i - 16] + s0 + w[i - 7] + s1;
        }
        auto a = h;
        for (int i = 0; i < 64; ++i) {
            std::uint32_t s1 = rotr(a[4], 6) ^ rotr(a[4], 11) ^ rotr(a[4], 25);
            std::uint32_t ch = (a[4] & a[5]) ^ (~a[4] & a[6]);
            std::uint32_t t1 = a[7] + s1 + ch + k[i] + w[i];
            std::uint32_t s0 = rotr(a[0], 2) ^ rotr(a[0], 13) ^ rotr(a[0], 22);
            std::uint32_t maj = (a[0] & a[1]) ^ (a[0] & a[2]) ^ (a[1] & a[2]);
            std::uint32_t t2 = s0 + maj;
            a[7] = a[6]; a[6] = a[5]; a[5] = a[4]; a[4] = a[3] + t1;
            a[3] = a[2]; a[2] = a[1]; a[1] = a[0]; a[0] = t1 + t2;
        }
        for (int i = 0; i < 8; ++i) h[i] += a[i];
    }

    void update(const unsigned char* p, std::size_t n) {
        total += n;
        while (n > 0) {
            std::size_t take = std::min(n, buf.size() - fill);
            std::memcpy(buf.data() + fill, p, take);
            fill += take;
            p += take;
            n -= take;
            if (fill == buf.size()) {
                block(buf.data());
                fill = 0;
            }
        }
    }

    std::string hex() {
        std::uint64_t bits = total * 8;
        unsigned char pad = 0x80;
        update(&pad, 1);
        unsigned char zero = 0;
        while (fill != 56) update(&zero, 1);
        unsigned char len[8];
        for (int i = 0; i < 8; ++i) len[i] = static_cast<unsigned char>(bits >> (56 - 8 * i));
        update(len, 8);
        static const char* digits = "0123456789abcdef";
        std::string out;
        for (std::uint32_t v : h)
            for (int i = 28; i >= 0; i -= 4) out += digits[(v >> i) & 0xf];
        return out;
    }
};

std::string rational_string(const mpq_class& v) {
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
    Sha256 s;
    s.update(reinterpret_cast<const unsigned char*>(bytes.data()), bytes.size());
    return s.hex();
}

std::string bound_report_json(const BoundResult& r, std::int64_t runtime_ms) {
    nlohmann::ordered_json j;
    j["format"] = 1;
    j["method"] = r.method;
    j["direction"] = r.direction;
    j["d"] = r.d;
    if (r.level >= 0) j["i"] = r.level;
    j["value"] = r.printed();
    j["precision"] = r.precision;
    if (!r.exact_form.empty()) j["exact"] = r.exact_form;
    nlohmann::ordered_json cert;
    if (r.b0) {
        cert["b0"] = decimal_string(*r.b0, 12);
        cert["f_b0"] = decimal_string(*r.f_b0, 12);
    }
    if (r.root) {
        cert["root_lo"] = rational_string(r.root->lo);
        cert["root_hi"] = rational_string(r.root->hi);
    }
    if (!r.discriminant.is_zero()) {
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (int k = 0; k <= r.discriminant.degree(); ++k) {
            if (r.discriminant.coeff(k) == 0) continue;
            nlohmann::ordered_json t;
            t["z"] = k;
            t["c"] = r.discriminant.coeff(k).get_str();
            terms.push_back(std::move(t));
        }
        cert["discriminant"] = std::move(terms);
    }
    if (!cert.is_null()) j["certificate"] = std::move(cert);
    j["runtime_ms"] = runtime_ms;
    return j.dump(2) + "\n";
}

std::string manifest_json(const RunManifest& m) {
    nlohmann::ordered_json j;
    j["format"] = 1;
    j["tool"] = kToolVersion;
    j["command"] = m.command;
    nlohmann::ordered_json params;
    for (const auto& [k, v] : m.parameters) params[k] = v;
    j["parameters"] = std::move(params);
    j["workers"] = m.workers;
    j["node_budget"] = m.node_budget;
    j["wall_ms"] = m.wall_ms;
    nlohmann::ordered_json outs;
    for (const auto& [k, v] : m.output_digests) outs[k] = v;
    j["outputs"] = std::move(outs);
    return j.dump(2) + "\n";
}

}  // namespace growth
