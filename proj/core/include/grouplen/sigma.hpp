#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace grouplen {

// A partition of the set of all primes into classes.
//
// Text syntax: classes of listed primes separated by '|', with a trailing
// rest-rule: "2,3|5|*" puts {2,3} and {5} in their own classes and every
// other prime in a singleton class; "*1" lumps all unlisted primes into a
// single class.  "*" alone is the partition into singletons and "*1" alone
// is the one-class partition.
class SigmaPartition {
public:
    enum class RestRule { singletons, one_class };

    SigmaPartition();  // singletons ("*")
    SigmaPartition(std::vector<std::vector<std::uint64_t>> classes, RestRule rest);

    static SigmaPartition parse(const std::string& spec);
    static SigmaPartition singletons();   // "*"
    static SigmaPartition one_class();    // "*1"

    std::string to_string() const;

    // Identifier of the class containing prime p; equal ids <=> same class.
    std::int64_t class_id(std::uint64_t p) const;
    bool same_class(std::uint64_t p, std::uint64_t q) const;

    const std::vector<std::vector<std::uint64_t>>& listed_classes() const;
    RestRule rest_rule() const;

    // Distinct class ids among the primes dividing n, in ascending order of
    // smallest member prime.
    std::vector<std::int64_t> classes_meeting(std::uint64_t n) const;
    // Largest divisor of n composed of primes from the class with this id.
    std::uint64_t class_part(std::uint64_t n, std::int64_t class_id) const;
    // True when every prime divisor of n lies in the single given class.
    bool is_class_number(std::uint64_t n, std::int64_t class_id) const;

private:
    std::vector<std::vector<std::uint64_t>> classes_;
    RestRule rest_ = RestRule::singletons;
};

bool is_prime(std::uint64_t n);
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);

}  // namespace grouplen
