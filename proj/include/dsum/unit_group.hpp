#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace dsum {

/// CRT decomposition of (Z/fZ)^*: one generator per cyclic factor
/// (primitive roots for odd prime powers, {-1, 5} for 2^k with k >= 3).
struct UnitGroup {
    std::uint64_t modulus;
    std::vector<std::uint64_t> generators;
    std::vector<std::uint64_t> orders;

    std::uint64_t order() const;
};

UnitGroup unit_group(std::uint64_t f);

/// Multiplicative order of x mod f.
std::uint64_t element_order(std::int64_t x, std::uint64_t f);

/// Subgroup of (Z/fZ)^* stored as its sorted element list.
class Subgroup {
public:
    /// Closure of the given generators (reduced mod f, must be units).
    static Subgroup generated_by(std::uint64_t f, std::vector<std::uint64_t> generators);

    std::uint64_t modulus() const { return modulus_; }
    const std::vector<std::uint64_t>& elements() const { return elements_; }
    const std::vector<std::uint64_t>& generators() const { return generators_; }
    std::size_t order() const { return elements_.size(); }

    bool contains(std::uint64_t x) const;
    bool contains_minus_one() const { return contains(modulus_ - 1 + (modulus_ == 1)); }
    /// Re-verifies closure, membership of 1 and coprimality.
    bool is_valid() const;

    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.modulus_ == b.modulus_ && a.elements_ == b.elements_;
    }

private:
    Subgroup() = default;
    std::uint64_t modulus_ = 1;
    std::vector<std::uint64_t> elements_;
    std::vector<std::uint64_t> generators_;
};

/// The unique subgroup of order n of (Z/pZ)^*, generated by g^((p-1)/n)
/// for the smallest primitive root g.
Subgroup subgroup_of_order(std::uint64_t n, std::uint64_t p);

/// ker((Z/fZ)^* -> (Z/f'Z)^*) = {x : x = 1 mod f'}.
Subgroup kernel_subgroup(std::uint64_t f, std::uint64_t f_prime);

/// All units of exact order q mod f, sorted.
std::vector<std::uint64_t> elements_of_order(std::uint64_t q, std::uint64_t f);

struct TraceValue {
    std::uint64_t residue;  // sum of the elements mod f
    std::uint64_t gcd;      // gcd(f, residue), with gcd(f, 0) = f
};

TraceValue trace(const Subgroup& h);

/// Discrete logarithms of every unit against the generators of a UnitGroup.
class CharacterTable {
public:
    explicit CharacterTable(UnitGroup group);

    const UnitGroup& group() const { return group_; }
    std::uint64_t modulus() const { return group_.modulus; }
    /// lcm of the component orders; character values are exp(2 pi i phase / exponent()).
    std::uint64_t exponent() const { return exponent_; }
    /// Exponent vector of the unit a, or an empty span if gcd(a, f) > 1.
    std::span<const std::uint32_t> log(std::uint64_t a) const;

private:
    UnitGroup group_;
    std::uint64_t exponent_;
    std::vector<std::int64_t> slot_;
    std::vector<std::uint32_t> logs_;
};

class DirichletCharacter {
public:
    DirichletCharacter(std::shared_ptr<const CharacterTable> table, std::vector<std::uint64_t> exponents);

    std::uint64_t modulus() const { return table_->modulus(); }
    const std::vector<std::uint64_t>& exponents() const { return exponents_; }
    const CharacterTable& table() const { return *table_; }

    /// chi(a) = exp(2 pi i phase / table().exponent()); nullopt when chi(a) = 0.
    std::optional<std::uint64_t> phase(std::int64_t a) const;
    std::complex<double> operator()(std::int64_t a) const;

    bool is_odd() const;
    bool is_trivial() const;
    bool is_trivial_on(const Subgroup& h) const;
    std::uint64_t order() const;

private:
    std::shared_ptr<const CharacterTable> table_;
    std::vector<std::uint64_t> exponents_;
};

/// All phi(f) characters mod f in lexicographic order of exponent vectors.
std::vector<DirichletCharacter> characters(std::uint64_t f);

/// X_f^-(H): odd characters trivial on H. Rejects -1 in H.
std::vector<DirichletCharacter> odd_characters_trivial_on(const Subgroup& h);

std::uint64_t conductor(const DirichletCharacter& chi);

/// Phase of chi*(q) for the primitive character inducing chi, in units of
/// 2 pi / chi.table().exponent(); nullopt when chi*(q) = 0.
std::optional<std::uint64_t> primitive_phase(const DirichletCharacter& chi, std::int64_t q);
std::complex<double> primitive_value(const DirichletCharacter& chi, std::int64_t q);

}  // namespace dsum
