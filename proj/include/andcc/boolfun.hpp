#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace andcc {

// An ordered finite ground set of named elements.  The order is fixed at
// construction and drives all iteration, indexing and tie-breaking.
class GroundSet {
public:
    explicit GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.size() > 63)
            throw std::invalid_argument("ground set larger than 63 elements");
        for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
            if (!index_.emplace(names_[i], i).second)
                throw std::invalid_argument("duplicate ground element: " + names_[i]);
        }
    }

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    int index(const std::string& label) const {
        auto it = index_.find(label);
        if (it == index_.end()) throw std::out_of_range("unknown ground element: " + label);
        return it->second;
    }
    bool contains(const std::string& label) const { return index_.count(label) != 0; }

    bool operator==(const GroundSet& o) const { return names_ == o.names_; }
    bool operator!=(const GroundSet& o) const { return !(*this == o); }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
};

using GroundSetPtr = std::shared_ptr<const GroundSet>;

inline GroundSetPtr make_ground(std::vector<std::string> names) {
    return std::make_shared<const GroundSet>(std::move(names));
}

// A function S -> {0,1}, packed into one machine word.  names[0] occupies
// the most significant bit position, so canonical_index() orders all of
// B^S lexicographically by bitstring.
class BoolFun {
public:
    BoolFun(GroundSetPtr ground, std::uint64_t canonical_bits)
        : ground_(std::move(ground)), bits_(canonical_bits) {
        if (!ground_) throw std::invalid_argument("null ground set");
        const int n = ground_->size();
        if (n < 64 && (bits_ >> n) != 0)
            throw std::invalid_argument("bits out of range for ground set");
    }

    static BoolFun constant(GroundSetPtr ground, bool value) {
        const int n = ground->size();
        const std::uint64_t mask = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
        return BoolFun(std::move(ground), value ? mask : 0);
    }

    static BoolFun from_bitstring(GroundSetPtr ground, const std::string& s) {
        if (static_cast<int>(s.size()) != ground->size())
            throw std::invalid_argument("bitstring length does not match ground set");
        std::uint64_t bits = 0;
        for (char c : s) {
            if (c != '0' && c != '1') throw std::invalid_argument("bitstring must be over {0,1}: " + s);
            bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
        }
        return BoolFun(std::move(ground), bits);
    }

    const GroundSetPtr& ground() const { return ground_; }
    int arity() const { return ground_->size(); }

    bool value(int i) const {
        if (i < 0 || i >= arity()) throw std::out_of_range("element index out of range");
        return (bits_ >> (arity() - 1 - i)) & 1;
    }
    bool value(const std::string& label) const { return value(ground_->index(label)); }

    std::uint64_t canonical_index() const { return bits_; }
    int ones() const { return std::popcount(bits_); }

    std::string bitstring() const {
        std::string s(arity(), '0');
        for (int i = 0; i < arity(); ++i)
            if (value(i)) s[i] = '1';
        return s;
    }

    bool same_ground(const BoolFun& o) const {
        return ground_ == o.ground_ || *ground_ == *o.ground_;
    }

    bool operator==(const BoolFun& o) const { return same_ground(o) && bits_ == o.bits_; }
    bool operator!=(const BoolFun& o) const { return !(*this == o); }

private:
    GroundSetPtr ground_;
    std::uint64_t bits_;
};

inline void require_same_ground(const BoolFun& f, const BoolFun& g) {
    if (!f.same_ground(g)) throw std::invalid_argument("mismatched ground sets");
}

// Pointwise AND.
inline BoolFun conj(const BoolFun& f, const BoolFun& g) {
    require_same_ground(f, g);
    return BoolFun(f.ground(), f.canonical_index() & g.canonical_index());
}

// Pointwise order: f(s) <= g(s) for all s.
inline bool leq(const BoolFun& f, const BoolFun& g) {
    require_same_ground(f, g);
    return (f.canonical_index() & ~g.canonical_index()) == 0;
}

// Pointwise complement.
inline BoolFun neg(const BoolFun& f) {
    const int n = f.arity();
    const std::uint64_t mask = n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
    return BoolFun(f.ground(), ~f.canonical_index() & mask);
}

// The indicator of one element.
inline BoolFun delta(const GroundSetPtr& ground, int i) {
    const int n = ground->size();
    if (i < 0 || i >= n) throw std::out_of_range("element index out of range");
    return BoolFun(ground, std::uint64_t{1} << (n - 1 - i));
}

inline BoolFun delta(const GroundSetPtr& ground, const std::string& label) {
    return delta(ground, ground->index(label));
}

}  // namespace andcc
