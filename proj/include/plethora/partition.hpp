#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "plethora/rational.hpp"

namespace plethora {

/// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    /// Parts are sorted into decreasing order; zero parts are rejected.
    Partition(std::vector<unsigned> parts);
    Partition(std::initializer_list<unsigned> parts) : Partition(std::vector<unsigned>(parts)) {}

    const std::vector<unsigned> &parts() const { return parts_; }
    unsigned size() const { return size_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// m_i: number of parts equal to i.
    std::map<unsigned, unsigned> multiplicities() const;

    /// Union of the parts of both partitions.
    Partition merged(const Partition &o) const;
    /// Every part multiplied by k.
    Partition scaled(unsigned k) const;

    std::string to_string() const;

    friend bool operator==(const Partition &a, const Partition &b) { return a.parts_ == b.parts_; }
    /// Orders by size, then lexicographically on the part list.
    friend std::strong_ordering operator<=>(const Partition &a, const Partition &b);

private:
    std::vector<unsigned> parts_;
    unsigned size_ = 0;
};

std::ostream &operator<<(std::ostream &os, const Partition &p);

/// All partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(unsigned n);

/// z_lambda = prod_i i^{m_i} m_i!
Rational z_of(const Partition &lambda);

} // namespace plethora
