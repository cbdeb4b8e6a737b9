#pragma once

#include "mihopf/rational.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace mihopf {

// A letter of the coordinate alphabet.  ZK is a z_k coordinate of the
// nonlinearity, ZN a z_n coordinate of the parameterizing polynomial (n != 0),
// ZC a colored z_k^i coordinate for the two-nonlinearity (RP2) setting.
struct Letter {
    enum Kind : std::uint8_t { ZK = 0, ZN = 1, ZC = 2 };
    Kind kind = ZK;
    int a = 0; // ZK: k;  ZN: n1;  ZC: color in {0,1}
    int b = 0; // ZN: n2;  ZC: k

    auto operator<=>(const Letter&) const = default;

    static Letter K(int k) { return {ZK, k, 0}; }
    static Letter Nn(N2 n) { return {ZN, n.a, n.b}; }
    static Letter C(int color, int k) { return {ZC, color, k}; }

    N2 n() const { return {a, b}; } // only meaningful for ZN
};

std::string letter_str(const Letter& l);
std::optional<Letter> parse_letter(const std::string& s);

// Finitely supported map letter -> positive multiplicity, kept as a sorted
// vector so that values are canonical and cheap to compare.
class MultiIndex {
public:
    using Entry = std::pair<Letter, int>;

    MultiIndex() = default;
    explicit MultiIndex(std::vector<Entry> entries);

    static MultiIndex unit(Letter l, int mult = 1);

    int at(const Letter& l) const;
    int length() const; // |gamma| = total multiplicity
    bool empty() const { return entries_.empty(); }
    const std::vector<Entry>& entries() const { return entries_; }

    MultiIndex plus(const Letter& l, int delta) const; // delta may be negative
    MultiIndex operator+(const MultiIndex& o) const;
    // componentwise subtraction; nullopt if any entry would go negative
    std::optional<MultiIndex> minus(const MultiIndex& o) const;
    bool contains(const MultiIndex& o) const; // o <= *this componentwise

    auto operator<=>(const MultiIndex&) const = default;

    std::string str() const;

private:
    std::vector<Entry> entries_;
};

// e_k, e_n, e_{i,k} shorthands
inline MultiIndex ek(int k, int mult = 1) { return MultiIndex::unit(Letter::K(k), mult); }
inline MultiIndex en(N2 n, int mult = 1) { return MultiIndex::unit(Letter::Nn(n), mult); }
inline MultiIndex ec(int color, int k, int mult = 1) { return MultiIndex::unit(Letter::C(color, k), mult); }

// Parse textual multi-indices like "2e0+e1", "e(1,0)", "e0_2+e1_0" (RP2
// colored letters), "0" for the empty index.
MultiIndex parse_multi_index(const std::string& s);

} // namespace mihopf
