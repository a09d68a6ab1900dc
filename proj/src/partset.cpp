#include "partid/partset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>

namespace partid {
namespace {

std::vector<std::size_t> sieve_primes(std::size_t bound) {
    std::vector<std::size_t> primes;
    if (bound < 2) {
        return primes;
    }
    std::vector<bool> composite(bound + 1, false);
    for (std::size_t i = 2; i <= bound; ++i) {
        if (composite[i]) {
            continue;
        }
        primes.push_back(i);
        for (std::size_t j = i * i; j <= bound; j += i) {
            composite[j] = true;
        }
    }
    return primes;
}

bool is_prime(std::size_t v) {
    if (v < 2) {
        return false;
    }
    for (std::size_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            return false;
        }
    }
    return true;
}

std::size_t parse_positive(std::string_view text, std::string_view context) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument(std::string(context) + ": not a non-negative integer: '" +
                                    std::string(text) + "'");
    }
    if (value == 0) {
        throw std::invalid_argument(std::string(context) + ": parts must be positive");
    }
    return value;
}

void validate_elements(const std::vector<std::size_t>& elements) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements[i] == 0) {
            throw std::invalid_argument("part set: parts must be positive");
        }
        if (i > 0 && elements[i] == elements[i - 1]) {
            throw std::invalid_argument("part set: duplicate part " + std::to_string(elements[i]));
        }
        if (i > 0 && elements[i] < elements[i - 1]) {
            throw std::invalid_argument("part set: parts must be listed in ascending order");
        }
    }
}

std::string join(const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace

PartSet PartSet::naturals() { return {Kind::naturals, "naturals"}; }
PartSet PartSet::primes() { return {Kind::primes, "primes"}; }
PartSet PartSet::squares() { return {Kind::squares, "squares"}; }
PartSet PartSet::odds() { return {Kind::odds, "odds"}; }

PartSet PartSet::from_list(std::vector<std::size_t> elements) {
    validate_elements(elements);
    std::string label = "list:" + join(elements);
    return {Kind::explicit_list, std::move(label), std::move(elements)};
}

PartSet PartSet::from_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("part set: cannot read file '" + path.string() + "'");
    }
    std::vector<std::size_t> elements;
    std::string line;
    while (std::getline(in, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        auto last = line.find_last_not_of(" \t\r");
        elements.push_back(parse_positive(std::string_view(line).substr(first, last - first + 1),
                                          "part set file"));
    }
    validate_elements(elements);
    return {Kind::file_backed, "file:" + path.string(), std::move(elements)};
}

std::vector<std::size_t> PartSet::enumerate(std::size_t bound) const {
    std::vector<std::size_t> out;
    switch (kind_) {
    case Kind::naturals:
        for (std::size_t a = 1; a <= bound; ++a) {
            out.push_back(a);
        }
        break;
    case Kind::primes:
        out = sieve_primes(bound);
        break;
    case Kind::squares:
        for (std::size_t r = 1; r * r <= bound; ++r) {
            out.push_back(r * r);
        }
        break;
    case Kind::odds:
        for (std::size_t a = 1; a <= bound; a += 2) {
            out.push_back(a);
        }
        break;
    case Kind::explicit_list:
    case Kind::file_backed: {
        auto end = std::upper_bound(elements_.begin(), elements_.end(), bound);
        out.assign(elements_.begin(), end);
        break;
    }
    }
    return out;
}

bool PartSet::contains(std::size_t value) const {
    switch (kind_) {
    case Kind::naturals:
        return value >= 1;
    case Kind::primes:
        return is_prime(value);
    case Kind::squares: {
        for (std::size_t r = 1; r * r <= value; ++r) {
            if (r * r == value) {
                return true;
            }
        }
        return false;
    }
    case Kind::odds:
        return value % 2 == 1;
    case Kind::explicit_list:
    case Kind::file_backed:
        return std::binary_search(elements_.begin(), elements_.end(), value);
    }
    return false;
}

PartSet parse_partset(std::string_view spec) {
    if (spec == "naturals") {
        return PartSet::naturals();
    }
    if (spec == "primes") {
        return PartSet::primes();
    }
    if (spec == "squares") {
        return PartSet::squares();
    }
    if (spec == "odds") {
        return PartSet::odds();
    }
    if (spec.starts_with("list:")) {
        std::string_view body = spec.substr(5);
        std::vector<std::size_t> elements;
        if (!body.empty()) {
            std::size_t start = 0;
            while (true) {
                std::size_t comma = body.find(',', start);
                std::string_view item = body.substr(start, comma == std::string_view::npos
                                                               ? std::string_view::npos
                                                               : comma - start);
                elements.push_back(parse_positive(item, "part set list"));
                if (comma == std::string_view::npos) {
                    break;
                }
                start = comma + 1;
            }
        }
        return PartSet::from_list(std::move(elements));
    }
    if (spec.starts_with("file:")) {
        return PartSet::from_file(std::filesystem::path(std::string(spec.substr(5))));
    }
    throw std::invalid_argument("unknown part set '" + std::string(spec) +
                                "' (expected naturals, primes, squares, odds, list:..., file:...)");
}

std::string render(const PartSet& set) { return set.label(); }

std::vector<PartSet> builtin_partsets() {
    return {PartSet::naturals(), PartSet::primes(), PartSet::squares(), PartSet::odds()};
}

}  // namespace partid
