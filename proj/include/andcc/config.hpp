#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace andcc {

// Thrown when a construction would exceed a configured dimension or
// enumeration limit.  Callers with a counting fallback catch this type.
class cap_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Exact coefficient field: the rationals (default) or a prime field F_p.
struct FieldSpec {
    enum class Kind { Rational, Prime };
    Kind kind = Kind::Rational;
    std::uint64_t p = 0;

    static FieldSpec rational() { return {}; }

    static FieldSpec prime(std::uint64_t q) {
        if (!is_prime(q))
            throw std::invalid_argument("field characteristic must be prime, got " + std::to_string(q));
        FieldSpec f;
        f.kind = Kind::Prime;
        f.p = q;
        return f;
    }

    // Accepts "rational" or "fp:<p>".
    static FieldSpec parse(const std::string& text) {
        if (text == "rational") return rational();
        if (text.rfind("fp:", 0) == 0) {
            std::uint64_t q = 0;
            try {
                q = std::stoull(text.substr(3));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad field spec: " + text);
            }
            return prime(q);
        }
        throw std::invalid_argument("unknown field spec: " + text + " (expected \"rational\" or \"fp:<p>\")");
    }

    std::string str() const {
        return kind == Kind::Rational ? "rational" : "fp:" + std::to_string(p);
    }

    bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
};

// Knobs shared by the CLI and the verification suites.
struct RunConfig {
    std::uint64_t seed = 0;
    FieldSpec field;
    int size_limit = 20;          // max |S| for cube constructions
    int dim_cap = 5000;           // max presheaf dimension per vertex
    long long path_cap = 100000;  // max stored paths per enumeration
    int trials = 0;               // 0 = per-suite defaults
    bool json = false;
};

}  // namespace andcc
