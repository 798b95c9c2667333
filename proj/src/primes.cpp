#include "dsum/primes.hpp"

#include <numeric>
#include <stdexcept>

#include "dsum/arith.hpp"

namespace dsum {

std::vector<std::uint32_t> simple_sieve(std::uint32_t n) {
    std::vector<std::uint32_t> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
    }
    return primes;
}

PrimeStream::PrimeStream(std::uint64_t lower, std::uint64_t upper, std::uint64_t modulus, std::uint64_t residue,
                         std::uint64_t segment_length)
    : lower_(std::max<std::uint64_t>(lower, 2)), upper_(upper), modulus_(modulus), residue_(residue),
      segment_length_(segment_length), seg_lo_(std::max<std::uint64_t>(lower, 2)) {
    if (modulus_ == 0) throw std::invalid_argument("PrimeStream: modulus must be positive");
    if (segment_length_ == 0) throw std::invalid_argument("PrimeStream: empty segment");
    if (upper_ < lower_) {
        exhausted_ = true;
        return;
    }
    base_primes_ = simple_sieve(static_cast<std::uint32_t>(isqrt(upper_)));
}

void PrimeStream::fill_segment() {
    pending_.clear();
    pending_pos_ = 0;
    while (pending_.empty() && !exhausted_) {
        const std::uint64_t lo = seg_lo_;
        const std::uint64_t hi = (upper_ - lo < segment_length_) ? upper_ : lo + segment_length_ - 1;
        std::vector<char> composite(hi - lo + 1, 0);
        for (std::uint64_t p : base_primes_) {
            if (p * p > hi) break;
            std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (std::uint64_t j = start; j <= hi; j += p) composite[j - lo] = 1;
        }
        // First candidate >= lo in the progression.
        std::uint64_t first = lo + (residue_ + modulus_ - lo % modulus_) % modulus_;
        for (std::uint64_t x = first; x <= hi; x += modulus_) {
            if (!composite[x - lo]) pending_.push_back(x);
            if (hi - x < modulus_) break;
        }
        if (hi == upper_) exhausted_ = true;
        else seg_lo_ = hi + 1;
    }
}

std::optional<std::uint64_t> PrimeStream::next() {
    if (pending_pos_ >= pending_.size()) {
        if (exhausted_) return std::nullopt;
        fill_segment();
        if (pending_.empty()) return std::nullopt;
    }
    return pending_[pending_pos_++];
}

PrimeStream primes_in_progression(std::uint64_t A, std::uint64_t span, std::uint64_t q, std::uint64_t r) {
    if (q == 0 || r >= q) throw std::invalid_argument("primes_in_progression: need 0 <= r < q");
    if (q > 1 && std::gcd(r, q) != 1)
        throw std::invalid_argument("primes_in_progression: gcd(r, q) > 1");
    return PrimeStream(A, A + span, q, r);
}

std::vector<std::uint64_t> collect(PrimeStream stream) {
    std::vector<std::uint64_t> out;
    while (auto p = stream.next()) out.push_back(*p);
    return out;
}

}  // namespace dsum
