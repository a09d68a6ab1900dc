#include "partid/statistic.hpp"

#include <stdexcept>

namespace partid {

MultiplicityCap MultiplicityCap::at_most(unsigned alpha) {
    if (alpha == 0) {
        throw std::invalid_argument("multiplicity cap alpha must be >= 1");
    }
    return MultiplicityCap(alpha);
}

std::size_t MultiplicityCap::max_multiplicity(std::size_t part, std::size_t max_n) const {
    std::size_t fit = max_n / part;
    if (limit_ && *limit_ < fit) {
        return *limit_;
    }
    return fit;
}

std::string MultiplicityCap::to_string() const {
    return limit_ ? std::to_string(*limit_) : std::string("inf");
}

std::string Statistic::name() const {
    bool capped = !cap.is_unbounded();
    switch (weighting) {
    case Weighting::plain:
        return capped ? "p_alpha" : "p";
    case Weighting::alternating:
        return capped ? "pbar_alpha" : "pbar";
    case Weighting::even_parts:
        return "even";
    case Weighting::odd_parts:
        return "odd";
    }
    return "?";
}

}  // namespace partid
