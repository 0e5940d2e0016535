#include "plethora/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "plethora/error.hpp"

namespace plethora {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts))
{
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    for (unsigned p : parts_) {
        require(p >= 1, "partition parts must be positive");
        size_ += p;
    }
}

std::map<unsigned, unsigned> Partition::multiplicities() const
{
    std::map<unsigned, unsigned> m;
    for (unsigned p : parts_) {
        ++m[p];
    }
    return m;
}

Partition Partition::merged(const Partition &o) const
{
    std::vector<unsigned> all = parts_;
    all.insert(all.end(), o.parts_.begin(), o.parts_.end());
    return Partition(std::move(all));
}

Partition Partition::scaled(unsigned k) const
{
    std::vector<unsigned> all = parts_;
    for (auto &p : all) {
        p *= k;
    }
    return Partition(std::move(all));
}

std::string Partition::to_string() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        os << (i ? "," : "") << parts_[i];
    }
    os << ')';
    return os.str();
}

std::strong_ordering operator<=>(const Partition &a, const Partition &b)
{
    if (auto c = a.size_ <=> b.size_; c != 0) {
        return c;
    }
    return a.parts_ <=> b.parts_;
}

std::ostream &operator<<(std::ostream &os, const Partition &p)
{
    return os << p.to_string();
}

namespace {

void generate(unsigned remaining, unsigned max_part, std::vector<unsigned> &prefix, std::vector<Partition> &out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        generate(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(unsigned n)
{
    std::vector<Partition> out;
    std::vector<unsigned> prefix;
    generate(n, n, prefix, out);
    return out;
}

Rational z_of(const Partition &lambda)
{
    BigInt z = 1;
    for (const auto &[part, mult] : lambda.multiplicities()) {
        BigInt power;
        mpz_ui_pow_ui(power.get_mpz_t(), part, mult);
        z *= power * factorial(mult);
    }
    return Rational(z);
}

} // namespace plethora
