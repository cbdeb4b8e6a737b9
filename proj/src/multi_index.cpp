#include "mihopf/multi_index.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mihopf {

std::string letter_str(const Letter& l) {
    switch (l.kind) {
        case Letter::ZK: return "k:" + std::to_string(l.a);
        case Letter::ZN: return "n:" + std::to_string(l.a) + "," + std::to_string(l.b);
        case Letter::ZC: return "z" + std::to_string(l.a) + ":" + std::to_string(l.b);
    }
    return "?";
}

std::optional<Letter> parse_letter(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) return std::nullopt;
    std::string head = s.substr(0, colon), tail = s.substr(colon + 1);
    try {
        if (head == "k") return Letter::K(std::stoi(tail));
        if (head == "n") {
            auto comma = tail.find(',');
            if (comma == std::string::npos) return std::nullopt;
            return Letter::Nn({std::stoi(tail.substr(0, comma)), std::stoi(tail.substr(comma + 1))});
        }
        if (head == "z0") return Letter::C(0, std::stoi(tail));
        if (head == "z1") return Letter::C(1, std::stoi(tail));
    } catch (const std::exception&) {
        return std::nullopt;
    }
    return std::nullopt;
}

MultiIndex::MultiIndex(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    // merge duplicates, drop zeros
    std::vector<Entry> merged;
    for (const auto& [l, m] : entries_) {
        if (!merged.empty() && merged.back().first == l) merged.back().second += m;
        else merged.push_back({l, m});
    }
    std::erase_if(merged, [](const Entry& e) { return e.second == 0; });
    for (const auto& [l, m] : merged)
        if (m < 0) throw std::invalid_argument("negative multiplicity in multi-index");
    entries_ = std::move(merged);
}

MultiIndex MultiIndex::unit(Letter l, int mult) {
    return MultiIndex{{{l, mult}}};
}

int MultiIndex::at(const Letter& l) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), l,
                               [](const Entry& e, const Letter& x) { return e.first < x; });
    return (it != entries_.end() && it->first == l) ? it->second : 0;
}

int MultiIndex::length() const {
    int n = 0;
    for (const auto& [l, m] : entries_) n += m;
    return n;
}

MultiIndex MultiIndex::plus(const Letter& l, int delta) const {
    std::vector<Entry> w = entries_;
    bool found = false;
    for (auto& e : w)
        if (e.first == l) { e.second += delta; found = true; break; }
    if (!found) w.push_back({l, delta});
    return MultiIndex(std::move(w));
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
    std::vector<Entry> w = entries_;
    w.insert(w.end(), o.entries_.begin(), o.entries_.end());
    return MultiIndex(std::move(w));
}

std::optional<MultiIndex> MultiIndex::minus(const MultiIndex& o) const {
    std::vector<Entry> w = entries_;
    for (const auto& [l, m] : o.entries_) {
        bool found = false;
        for (auto& e : w)
            if (e.first == l) {
                e.second -= m;
                if (e.second < 0) return std::nullopt;
                found = true;
                break;
            }
        if (!found) return std::nullopt;
    }
    std::erase_if(w, [](const Entry& e) { return e.second == 0; });
    return MultiIndex(std::move(w));
}

bool MultiIndex::contains(const MultiIndex& o) const { return minus(o).has_value(); }

std::string MultiIndex::str() const {
    if (entries_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [l, m] : entries_) {
        if (!first) out << "+";
        first = false;
        if (m != 1) out << m;
        switch (l.kind) {
            case Letter::ZK: out << "e" << l.a; break;
            case Letter::ZN: out << "e(" << l.a << "," << l.b << ")"; break;
            case Letter::ZC: out << "e" << l.a << "_" << l.b; break;
        }
    }
    return out.str();
}

namespace {

// one term of the textual format: [mult] e<k> | e(n1,n2) | e<color>_<k>
MultiIndex::Entry parse_term(const std::string& t) {
    size_t i = 0;
    int mult = 1;
    if (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) {
        size_t j = i;
        while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
        mult = std::stoi(t.substr(i, j - i));
        i = j;
    }
    if (i >= t.size() || t[i] != 'e') throw std::invalid_argument("bad multi-index term: " + t);
    ++i;
    if (i < t.size() && t[i] == '(') {
        auto close = t.find(')', i);
        auto comma = t.find(',', i);
        if (close == std::string::npos || comma == std::string::npos || comma > close)
            throw std::invalid_argument("bad polynomial letter: " + t);
        int n1 = std::stoi(t.substr(i + 1, comma - i - 1));
        int n2 = std::stoi(t.substr(comma + 1, close - comma - 1));
        if (n1 == 0 && n2 == 0) throw std::invalid_argument("polynomial letter n must be nonzero");
        return {Letter::Nn({n1, n2}), mult};
    }
    auto under = t.find('_', i);
    if (under != std::string::npos) {
        int color = std::stoi(t.substr(i, under - i));
        int k = std::stoi(t.substr(under + 1));
        if (color != 0 && color != 1) throw std::invalid_argument("color must be 0 or 1: " + t);
        return {Letter::C(color, k), mult};
    }
    return {Letter::K(std::stoi(t.substr(i))), mult};
}

} // namespace

MultiIndex parse_multi_index(const std::string& s) {
    std::string trimmed;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty() || trimmed == "0") return MultiIndex{};
    std::vector<MultiIndex::Entry> entries;
    size_t pos = 0;
    while (pos != std::string::npos) {
        auto plus = trimmed.find('+', pos);
        std::string term = (plus == std::string::npos) ? trimmed.substr(pos)
                                                       : trimmed.substr(pos, plus - pos);
        if (term.empty()) throw std::invalid_argument("empty term in multi-index: " + s);
        entries.push_back(parse_term(term));
        pos = (plus == std::string::npos) ? std::string::npos : plus + 1;
    }
    return MultiIndex(std::move(entries));
}

} // namespace mihopf
