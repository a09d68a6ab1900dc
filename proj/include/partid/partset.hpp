#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace partid {

/// A set A of distinct positive integers used as the allowed parts.
///
/// Builtin sets are infinite and enumerated on demand up to a bound; explicit
/// lists and file-backed sets are finite and validated at construction
/// (positive, strictly ascending). Instances are immutable.
class PartSet {
public:
    enum class Kind { naturals, primes, squares, odds, explicit_list, file_backed };

    static PartSet naturals();
    static PartSet primes();
    static PartSet squares();
    static PartSet odds();
    /// Throws std::invalid_argument unless `elements` is positive and strictly ascending.
    static PartSet from_list(std::vector<std::size_t> elements);
    /// One positive integer per line, ascending and distinct. Blank lines are ignored.
    static PartSet from_file(const std::filesystem::path& path);

    Kind kind() const { return kind_; }
    const std::string& label() const { return label_; }
    bool is_finite() const { return kind_ == Kind::explicit_list || kind_ == Kind::file_backed; }

    /// All elements a <= bound, ascending.
    std::vector<std::size_t> enumerate(std::size_t bound) const;
    bool contains(std::size_t value) const;

private:
    PartSet(Kind kind, std::string label, std::vector<std::size_t> elements = {})
        : kind_(kind), label_(std::move(label)), elements_(std::move(elements)) {}

    Kind kind_;
    std::string label_;
    std::vector<std::size_t> elements_;  // finite kinds only
};

/// Parses `naturals | primes | squares | odds | list:<c1>,<c2>,... | file:<path>`.
/// Throws std::invalid_argument on malformed input.
PartSet parse_partset(std::string_view spec);

/// Inverse of parse_partset. File-backed sets render as their `file:` spec.
std::string render(const PartSet& set);

/// The four infinite builtin sets, in a fixed order.
std::vector<PartSet> builtin_partsets();

}  // namespace partid
