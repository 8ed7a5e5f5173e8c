#include "grouplen/sigma.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "grouplen/errors.hpp"

namespace grouplen {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> factors;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            factors.emplace_back(d, e);
        }
    }
    if (n > 1) factors.emplace_back(n, 1);
    return factors;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
    std::uint64_t part = 1;
    while (n % p == 0) {
        n /= p;
        part *= p;
    }
    return part;
}

SigmaPartition::SigmaPartition() = default;

SigmaPartition::SigmaPartition(std::vector<std::vector<std::uint64_t>> classes,
                               RestRule rest)
    : classes_(std::move(classes)), rest_(rest) {
    std::map<std::uint64_t, bool> seen;
    for (auto& cls : classes_) {
        if (cls.empty())
            throw std::invalid_argument("sigma partition: empty class");
        std::sort(cls.begin(), cls.end());
        for (std::uint64_t p : cls) {
            if (!is_prime(p))
                throw std::invalid_argument("sigma partition: " + std::to_string(p) +
                                            " is not prime");
            if (seen[p])
                throw std::invalid_argument("sigma partition: prime " +
                                            std::to_string(p) + " listed twice");
            seen[p] = true;
        }
    }
}

SigmaPartition SigmaPartition::singletons() { return SigmaPartition(); }

SigmaPartition SigmaPartition::one_class() {
    return SigmaPartition({}, RestRule::one_class);
}

SigmaPartition SigmaPartition::parse(const std::string& spec) {
    // Grammar: class ("|" class)* where a class is "p(,p)*" and the last
    // class may instead be the rest marker "*" or "*1".
    if (spec.empty()) throw parse_error("empty sigma partition", 1, 1);

    std::vector<std::vector<std::uint64_t>> classes;
    RestRule rest = RestRule::singletons;
    bool saw_rest = false;

    std::size_t pos = 0;
    std::size_t part_start = 0;
    auto handle_part = [&](const std::string& part, std::size_t at) {
        if (saw_rest)
            throw parse_error("rest marker must come last", 1, at + 1);
        if (part == "*") {
            rest = RestRule::singletons;
            saw_rest = true;
            return;
        }
        if (part == "*1") {
            rest = RestRule::one_class;
            saw_rest = true;
            return;
        }
        if (part.empty()) throw parse_error("empty sigma class", 1, at + 1);
        std::vector<std::uint64_t> cls;
        std::size_t i = 0;
        while (i < part.size()) {
            std::size_t start = i;
            while (i < part.size() && part[i] >= '0' && part[i] <= '9') ++i;
            if (i == start)
                throw parse_error("expected a prime", 1, at + start + 1);
            cls.push_back(std::stoull(part.substr(start, i - start)));
            if (i < part.size()) {
                if (part[i] != ',')
                    throw parse_error("expected ',' between primes", 1, at + i + 1);
                ++i;
                if (i == part.size())
                    throw parse_error("trailing ',' in sigma class", 1, at + i);
            }
        }
        classes.push_back(std::move(cls));
    };

    while (pos <= spec.size()) {
        if (pos == spec.size() || spec[pos] == '|') {
            handle_part(spec.substr(part_start, pos - part_start), part_start);
            part_start = pos + 1;
        }
        ++pos;
    }
    if (!saw_rest)
        throw parse_error("sigma partition must end with a rest marker '*' or '*1'",
                          1, spec.size() + 1);
    try {
        return SigmaPartition(std::move(classes), rest);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), 1, 1);
    }
}

std::string SigmaPartition::to_string() const {
    std::string out;
    for (const auto& cls : classes_) {
        for (std::size_t i = 0; i < cls.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(cls[i]);
        }
        out += '|';
    }
    out += rest_ == RestRule::singletons ? "*" : "*1";
    return out;
}

std::int64_t SigmaPartition::class_id(std::uint64_t p) const {
    if (!is_prime(p))
        throw std::invalid_argument("class_id of a non-prime " + std::to_string(p));
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (std::find(classes_[i].begin(), classes_[i].end(), p) != classes_[i].end())
            return static_cast<std::int64_t>(i);
    // Unlisted primes: one shared id under one_class, the (unique) negated
    // prime as id under singletons.
    if (rest_ == RestRule::one_class) return -1;
    return -static_cast<std::int64_t>(p);
}

bool SigmaPartition::same_class(std::uint64_t p, std::uint64_t q) const {
    return class_id(p) == class_id(q);
}

const std::vector<std::vector<std::uint64_t>>& SigmaPartition::listed_classes() const {
    return classes_;
}

SigmaPartition::RestRule SigmaPartition::rest_rule() const { return rest_; }

std::vector<std::int64_t> SigmaPartition::classes_meeting(std::uint64_t n) const {
    std::vector<std::int64_t> ids;
    for (const auto& [p, e] : factorize(n)) {
        (void)e;
        std::int64_t id = class_id(p);
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
    }
    return ids;  // ascending by smallest member: factorize yields primes ascending
}

std::uint64_t SigmaPartition::class_part(std::uint64_t n, std::int64_t id) const {
    std::uint64_t part = 1;
    for (const auto& [p, e] : factorize(n)) {
        (void)e;
        if (class_id(p) == id) part *= p_part(n, p);
    }
    return part;
}

bool SigmaPartition::is_class_number(std::uint64_t n, std::int64_t id) const {
    for (const auto& [p, e] : factorize(n)) {
        (void)e;
        if (class_id(p) != id) return false;
    }
    return true;
}

}  // namespace grouplen
