#include "dsum/unit_group.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "dsum/arith.hpp"

namespace dsum {

std::uint64_t UnitGroup::order() const {
    std::uint64_t r = 1;
    for (auto o : orders) r *= o;
    return r;
}

namespace {

// x = g (mod pe), x = 1 (mod f / pe).
std::uint64_t crt_lift(std::uint64_t g, std::uint64_t pe, std::uint64_t f) {
    const std::uint64_t rest = f / pe;
    if (rest == 1) return g % f;
    // x = 1 + rest * t, rest * t = g - 1 (mod pe)
    const std::uint64_t t = mulmod((g + pe - 1) % pe, invmod(rest % pe, pe), pe);
    return (1 + mulmod(rest, t, f)) % f;
}

std::uint64_t normalize(std::int64_t x, std::uint64_t f) {
    std::int64_t r = x % static_cast<std::int64_t>(f);
    if (r < 0) r += static_cast<std::int64_t>(f);
    return static_cast<std::uint64_t>(r);
}

}  // namespace

UnitGroup unit_group(std::uint64_t f) {
    if (f <= 1) throw std::invalid_argument("unit_group: modulus must be >= 2");
    UnitGroup g{f, {}, {}};
    for (const auto& [p, e] : factorize(static_cast<std::int64_t>(f))) {
        std::uint64_t pe = 1;
        for (unsigned i = 0; i < e; ++i) pe *= p;
        if (p == 2) {
            if (e == 1) continue;
            g.generators.push_back(crt_lift(pe - 1, pe, f));
            g.orders.push_back(2);
            if (e >= 3) {
                g.generators.push_back(crt_lift(5, pe, f));
                g.orders.push_back(pe / 4);
            }
        } else {
            g.generators.push_back(crt_lift(smallest_primitive_root(pe), pe, f));
            g.orders.push_back(pe / p * (p - 1));
        }
    }
    return g;
}

std::uint64_t element_order(std::int64_t x, std::uint64_t f) {
    if (f == 0) throw std::invalid_argument("element_order: modulus must be positive");
    const std::uint64_t a = normalize(x, f);
    if (f == 1) return 1;
    if (std::gcd(a, f) != 1) throw std::invalid_argument("element_order: element is not a unit");
    std::uint64_t ord = totient(static_cast<std::int64_t>(f));
    for (const auto& [q, e] : factorize(static_cast<std::int64_t>(ord))) {
        for (unsigned i = 0; i < e && ord % q == 0 && powmod(a, ord / q, f) == 1; ++i) ord /= q;
    }
    return ord;
}

Subgroup Subgroup::generated_by(std::uint64_t f, std::vector<std::uint64_t> generators) {
    if (f < 1) throw std::invalid_argument("Subgroup: modulus must be positive");
    Subgroup h;
    h.modulus_ = f;
    for (auto& g : generators) {
        g %= f;
        if (std::gcd(g, f) != 1 && f > 1) throw std::invalid_argument("Subgroup: generator is not a unit");
    }
    h.generators_ = generators;
    std::vector<std::uint64_t> elems{1 % f};
    std::vector<char> seen(f, 0);
    seen[1 % f] = 1;
    // Closing each generator in turn: H_{i+1} = union of H_i * g^k.
    for (const auto g : generators) {
        std::vector<std::uint64_t> layer = elems;
        std::uint64_t gk = g;
        while (!seen[gk]) {
            for (const auto e : elems) {
                const std::uint64_t x = mulmod(e, gk, f);
                if (!seen[x]) { seen[x] = 1; layer.push_back(x); }
            }
            gk = mulmod(gk, g, f);
        }
        elems = std::move(layer);
    }
    std::sort(elems.begin(), elems.end());
    h.elements_ = std::move(elems);
    return h;
}

bool Subgroup::contains(std::uint64_t x) const {
    return std::binary_search(elements_.begin(), elements_.end(), x % modulus_);
}

bool Subgroup::is_valid() const {
    if (!contains(1)) return false;
    if (!std::is_sorted(elements_.begin(), elements_.end())) return false;
    for (auto a : elements_) {
        if (modulus_ > 1 && std::gcd(a, modulus_) != 1) return false;
        for (auto b : elements_)
            if (!contains(mulmod(a, b, modulus_))) return false;
    }
    return true;
}

Subgroup subgroup_of_order(std::uint64_t n, std::uint64_t p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("subgroup_of_order: p must be an odd prime");
    if (n == 0 || (p - 1) % n != 0) throw std::invalid_argument("subgroup_of_order: n must divide p - 1");
    const std::uint64_t g = smallest_primitive_root(p);
    return Subgroup::generated_by(p, {powmod(g, (p - 1) / n, p)});
}

Subgroup kernel_subgroup(std::uint64_t f, std::uint64_t f_prime) {
    if (f < 2) throw std::invalid_argument("kernel_subgroup: modulus must be >= 2");
    if (f_prime < 1 || f % f_prime != 0) throw std::invalid_argument("kernel_subgroup: f' must divide f");
    std::vector<std::uint64_t> gens;
    Subgroup h = Subgroup::generated_by(f, gens);
    for (std::uint64_t x = 1; x < f; x += f_prime) {
        if (std::gcd(x, f) != 1 || h.contains(x)) continue;
        gens.push_back(x);
        h = Subgroup::generated_by(f, gens);
    }
    return h;
}

std::vector<std::uint64_t> elements_of_order(std::uint64_t q, std::uint64_t f) {
    std::vector<std::uint64_t> out;
    if (f < 2) return out;
    const std::uint64_t phi = totient(static_cast<std::int64_t>(f));
    if (q == 0 || phi % q != 0) return out;
    for (std::uint64_t x = 1; x < f; ++x) {
        if (std::gcd(x, f) != 1 || powmod(x, q, f) != 1) continue;
        if (element_order(static_cast<std::int64_t>(x), f) == q) out.push_back(x);
    }
    return out;
}

TraceValue trace(const Subgroup& h) {
    const std::uint64_t f = h.modulus();
    std::uint64_t t = 0;
    for (auto x : h.elements()) t = (t + x) % f;
    return {t, std::gcd(f, t)};
}

CharacterTable::CharacterTable(UnitGroup group) : group_(std::move(group)) {
    const std::uint64_t f = group_.modulus;
    exponent_ = 1;
    for (auto o : group_.orders) exponent_ = std::lcm(exponent_, o);
    const std::size_t k = group_.orders.size();
    const std::uint64_t n = group_.order();
    slot_.assign(f, -1);
    logs_.assign(n * k, 0);
    std::vector<std::uint32_t> e(k, 0);
    std::uint64_t cur = 1 % f;
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        slot_[cur] = static_cast<std::int64_t>(idx);
        std::copy(e.begin(), e.end(), logs_.begin() + static_cast<std::ptrdiff_t>(idx * k));
        // Odometer step; g_j^{ord_j} = 1 so the carry needs no correction factor.
        for (std::size_t j = 0; j < k; ++j) {
            cur = mulmod(cur, group_.generators[j], f);
            if (++e[j] < group_.orders[j]) break;
            e[j] = 0;
        }
    }
}

std::span<const std::uint32_t> CharacterTable::log(std::uint64_t a) const {
    const std::int64_t s = slot_[a % group_.modulus];
    if (s < 0) return {};
    const std::size_t k = group_.orders.size();
    return {logs_.data() + static_cast<std::size_t>(s) * k, k};
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const CharacterTable> table,
                                       std::vector<std::uint64_t> exponents)
    : table_(std::move(table)), exponents_(std::move(exponents)) {
    const auto& orders = table_->group().orders;
    if (exponents_.size() != orders.size()) throw std::invalid_argument("DirichletCharacter: exponent vector size");
    for (std::size_t j = 0; j < orders.size(); ++j) exponents_[j] %= orders[j];
}

std::optional<std::uint64_t> DirichletCharacter::phase(std::int64_t a) const {
    const std::uint64_t f = modulus();
    const auto lg = table_->log(normalize(a, f));
    if (lg.empty()) return std::nullopt;
    const std::uint64_t L = table_->exponent();
    const auto& orders = table_->group().orders;
    unsigned __int128 acc = 0;
    for (std::size_t j = 0; j < orders.size(); ++j)
        acc += static_cast<unsigned __int128>(exponents_[j]) * lg[j] % orders[j] * (L / orders[j]);
    return static_cast<std::uint64_t>(acc % L);
}

std::complex<double> DirichletCharacter::operator()(std::int64_t a) const {
    const auto ph = phase(a);
    if (!ph) return {0.0, 0.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(*ph) / static_cast<double>(table_->exponent()));
}

bool DirichletCharacter::is_odd() const {
    const auto ph = phase(static_cast<std::int64_t>(modulus()) - 1);
    return ph && 2 * *ph == table_->exponent();
}

bool DirichletCharacter::is_trivial() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](auto e) { return e == 0; });
}

bool DirichletCharacter::is_trivial_on(const Subgroup& h) const {
    return std::all_of(h.elements().begin(), h.elements().end(), [&](std::uint64_t x) {
        const auto ph = phase(static_cast<std::int64_t>(x));
        return ph && *ph == 0;
    });
}

std::uint64_t DirichletCharacter::order() const {
    const auto& orders = table_->group().orders;
    std::uint64_t ord = 1;
    for (std::size_t j = 0; j < orders.size(); ++j) ord = std::lcm(ord, orders[j] / std::gcd(orders[j], exponents_[j]));
    return ord;
}

std::vector<DirichletCharacter> characters(std::uint64_t f) {
    if (f <= 2) throw std::invalid_argument("characters: modulus must be >= 3");
    auto table = std::make_shared<const CharacterTable>(unit_group(f));
    const auto& orders = table->group().orders;
    const std::size_t k = orders.size();
    std::vector<DirichletCharacter> out;
    out.reserve(table->group().order());
    std::vector<std::uint64_t> e(k, 0);
    for (;;) {
        out.emplace_back(table, e);
        std::size_t j = k;
        while (j > 0) {
            --j;
            if (++e[j] < orders[j]) break;
            e[j] = 0;
            if (j == 0) return out;
        }
        if (k == 0) return out;
    }
}

std::vector<DirichletCharacter> odd_characters_trivial_on(const Subgroup& h) {
    if (h.contains_minus_one()) throw std::invalid_argument("odd_characters_trivial_on: -1 lies in H");
    std::vector<DirichletCharacter> out;
    for (auto& chi : characters(h.modulus()))
        if (chi.is_odd() && chi.is_trivial_on(h)) out.push_back(std::move(chi));
    return out;
}

std::uint64_t conductor(const DirichletCharacter& chi) {
    const std::uint64_t f = chi.modulus();
    for (std::uint64_t d : divisors(static_cast<std::int64_t>(f))) {
        bool trivial = true;
        for (std::uint64_t x = 1 % f; x < f && trivial; x += d) {
            if (std::gcd(x, f) != 1) continue;
            const auto ph = chi.phase(static_cast<std::int64_t>(x));
            trivial = ph && *ph == 0;
        }
        if (trivial) return d;
    }
    return f;
}

std::optional<std::uint64_t> primitive_phase(const DirichletCharacter& chi, std::int64_t q) {
    const std::uint64_t f = chi.modulus();
    const std::uint64_t cond = conductor(chi);
    const std::uint64_t qr = normalize(q, cond);
    if (cond > 1 && std::gcd(qr, cond) != 1) return std::nullopt;
    for (std::uint64_t x = qr; ; x += cond) {
        if (std::gcd(x % f, f) == 1) return chi.phase(static_cast<std::int64_t>(x % f));
    }
}

std::complex<double> primitive_value(const DirichletCharacter& chi, std::int64_t q) {
    const auto ph = primitive_phase(chi, q);
    if (!ph) return {0.0, 0.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(*ph) / static_cast<double>(chi.table().exponent()));
}

}  // namespace dsum
