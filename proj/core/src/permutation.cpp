#include "grouplen/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace grouplen {

Permutation::Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), point_t{0});
}

Permutation Permutation::from_images(std::vector<point_t> images) {
    std::vector<bool> seen(images.size(), false);
    for (point_t img : images) {
        if (img >= images.size() || seen[img])
            throw std::invalid_argument("image vector is not a bijection");
        seen[img] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::operator*(const Permutation& other) const {
    if (degree() != other.degree())
        throw std::invalid_argument("permutation degree mismatch in product");
    std::vector<point_t> result(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x)
        result[x] = other.images_[images_[x]];
    Permutation p;
    p.images_ = std::move(result);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<point_t> result(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x)
        result[images_[x]] = static_cast<point_t>(x);
    Permutation p;
    p.images_ = std::move(result);
    return p;
}

bool Permutation::is_identity() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != x) return false;
    return true;
}

std::optional<point_t> Permutation::smallest_moved_point() const {
    for (std::size_t x = 0; x < images_.size(); ++x)
        if (images_[x] != x) return static_cast<point_t>(x);
    return std::nullopt;
}

Permutation conjugate(const Permutation& g, const Permutation& h) {
    return h.inverse() * g * h;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
    return a.inverse() * b.inverse() * a * b;
}

namespace {

[[noreturn]] void cycle_error(const std::string& message) {
    throw std::invalid_argument("cycle notation: " + message);
}

}  // namespace

Permutation parse_cycles(const std::string& text, std::size_t degree) {
    std::vector<point_t> images(degree);
    std::iota(images.begin(), images.end(), point_t{0});
    std::vector<bool> used(degree, false);

    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    skip_ws();
    if (i == text.size()) cycle_error("empty text");
    bool any_cycle = false;
    while (i < text.size()) {
        skip_ws();
        if (i == text.size()) break;
        if (text[i] != '(') cycle_error("expected '('");
        ++i;
        std::vector<point_t> cycle;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!cycle.empty()) {
                if (text[i] != ',') cycle_error("expected ',' or ')'");
                ++i;
                skip_ws();
            }
            std::size_t start = i;
            while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
            if (i == start) cycle_error("expected a point number");
            unsigned long long value = std::stoull(text.substr(start, i - start));
            if (value == 0) cycle_error("points are 1-based; found 0");
            if (value > degree) cycle_error("point " + std::to_string(value) +
                                            " exceeds degree " + std::to_string(degree));
            point_t pt = static_cast<point_t>(value - 1);
            if (used[pt]) cycle_error("repeated point " + std::to_string(value));
            used[pt] = true;
            cycle.push_back(pt);
            skip_ws();
        }
        if (i == text.size()) cycle_error("unterminated cycle");
        ++i;  // consume ')'
        any_cycle = true;
        for (std::size_t k = 0; k < cycle.size(); ++k)
            images[cycle[k]] = cycle[(k + 1) % cycle.size()];
        skip_ws();
    }
    if (!any_cycle) cycle_error("no cycles found");
    return Permutation::from_images(std::move(images));
}

std::string to_cycles(const Permutation& p) {
    std::string out;
    std::vector<bool> seen(p.degree(), false);
    for (point_t start = 0; start < p.degree(); ++start) {
        if (seen[start] || p(start) == start) continue;
        out += '(';
        point_t x = start;
        bool first = true;
        do {
            if (!first) out += ',';
            out += std::to_string(x + 1);
            seen[x] = true;
            x = p(x);
            first = false;
        } while (x != start);
        out += ')';
    }
    if (out.empty()) out = "()";
    return out;
}

std::size_t permutation_order(const Permutation& p) {
    std::vector<bool> seen(p.degree(), false);
    std::size_t order = 1;
    for (point_t start = 0; start < p.degree(); ++start) {
        if (seen[start]) continue;
        std::size_t len = 0;
        point_t x = start;
        do {
            seen[x] = true;
            x = p(x);
            ++len;
        } while (x != start);
        order = std::lcm(order, len);
    }
    return order;
}

}  // namespace grouplen
