#include "wilf/partition.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include <json.hpp>

#include "wilf/errors.hpp"

namespace wilf {

namespace {

std::uint64_t parse_positive(std::string_view token, std::string_view whole) {
    std::uint64_t value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
        throw InvalidPartition("malformed partition text '" + std::string(whole) + "'");
    }
    if (value == 0) {
        throw InvalidPartition("zero part or multiplicity in '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

Partition Partition::canonicalize(std::vector<Term> raw) {
    for (const Term& t : raw) {
        if (t.part == 0 || t.multiplicity == 0) {
            throw InvalidPartition("parts and multiplicities must be positive");
        }
    }
    std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) { return a.part > b.part; });
    for (std::size_t i = 1; i < raw.size(); ++i) {
        if (raw[i].part == raw[i - 1].part) {
            throw InvalidPartition("duplicate part " + std::to_string(raw[i].part));
        }
    }
    return Partition(std::move(raw));
}

Partition Partition::canonicalize(std::span<const std::pair<std::uint64_t, std::uint64_t>> raw) {
    std::vector<Term> terms;
    terms.reserve(raw.size());
    for (const auto& [p, m] : raw) terms.push_back({p, m});
    return canonicalize(std::move(terms));
}

Count Partition::weight() const {
    Count total;
    for (const Term& t : terms_) total += Count(t.part) * Count(t.multiplicity);
    return total;
}

bool Partition::is_wilf() const {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(terms_.size());
    for (const Term& t : terms_) {
        if (!seen.insert(t.multiplicity).second) return false;
    }
    return true;
}

Partition Partition::involute() const {
    if (!is_wilf()) throw NotWilf("involution requires pairwise distinct multiplicities: " + to_string());
    std::vector<Term> swapped;
    swapped.reserve(terms_.size());
    for (const Term& t : terms_) swapped.push_back({t.multiplicity, t.part});
    return canonicalize(std::move(swapped));
}

bool Partition::is_fixed_point() const {
    return is_wilf() && involute() == *this;
}

std::vector<std::uint64_t> Partition::expanded() const {
    std::vector<std::uint64_t> parts;
    for (const Term& t : terms_) parts.insert(parts.end(), t.multiplicity, t.part);
    return parts;
}

std::string Partition::to_string() const {
    std::string out;
    for (const Term& t : terms_) {
        if (!out.empty()) out += '+';
        out += std::to_string(t.part);
        out += '^';
        out += std::to_string(t.multiplicity);
    }
    return out;
}

Partition Partition::parse(std::string_view text) {
    std::vector<Term> terms;
    if (text.empty()) return Partition();
    std::size_t start = 0;
    while (true) {
        const std::size_t plus = text.find('+', start);
        const std::string_view term = text.substr(start, plus == std::string_view::npos ? text.size() - start : plus - start);
        const std::size_t caret = term.find('^');
        if (caret == std::string_view::npos) {
            throw InvalidPartition("term without '^' in '" + std::string(text) + "'");
        }
        terms.push_back({parse_positive(term.substr(0, caret), text), parse_positive(term.substr(caret + 1), text)});
        if (plus == std::string_view::npos) break;
        start = plus + 1;
    }
    Partition p = canonicalize(terms);
    if (p.terms_ != terms) {
        throw InvalidPartition("parts must be written in strictly decreasing order: '" + std::string(text) + "'");
    }
    return p;
}

std::string Partition::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const Term& t : terms_) arr.push_back({t.part, t.multiplicity});
    return arr.dump();
}

Partition Partition::parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidPartition(std::string("malformed partition JSON: ") + e.what());
    }
    if (!doc.is_array()) throw InvalidPartition("partition JSON must be an array of [part, multiplicity] pairs");
    std::vector<Term> terms;
    for (const auto& item : doc) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() || !item[1].is_number_unsigned()) {
            throw InvalidPartition("partition JSON entries must be [part, multiplicity] with positive integers");
        }
        terms.push_back({item[0].get<std::uint64_t>(), item[1].get<std::uint64_t>()});
    }
    Partition p = canonicalize(terms);
    if (p.terms_ != terms) throw InvalidPartition("partition JSON must list parts in strictly decreasing order");
    return p;
}

Partition merge_disjoint(const Partition& a, const Partition& b) {
    std::vector<Term> terms = a.terms();
    terms.insert(terms.end(), b.terms().begin(), b.terms().end());
    return Partition::canonicalize(std::move(terms));
}

}  // namespace wilf
