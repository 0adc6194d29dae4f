#include "mqt/field.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace mqt {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 add_mod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128(a) + b) % p); }
u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 s : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % s == 0) return n == s;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

u64 inv_mod(u64 a, u64 p) {
    // Extended Euclid on integers; p prime, a != 0.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<u64>(t);
}

// --- polynomial helpers over GF(p); coefficient vectors, constant term first ---

using Poly = std::vector<u64>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }  // -1 for zero

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], p), p);
        }
    }
    poly_trim(r);
    return r;
}

// In-place a -= c * b * x^shift.
void poly_sub_scaled(Poly& a, const Poly& b, u64 c, std::size_t shift, u64 p) {
    if (c == 0) return;
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
        const u64 s = mul_mod(c, b[i], p);
        a[i + shift] = add_mod(a[i + shift], s == 0 ? 0 : p - s, p);
    }
    poly_trim(a);
}

Poly poly_mod(Poly a, const Poly& m, u64 p) {
    poly_trim(a);
    const int dm = poly_deg(m);
    u64 lead_inv = inv_mod(m.back(), p);
    while (poly_deg(a) >= dm) {
        const std::size_t shift = static_cast<std::size_t>(poly_deg(a) - dm);
        const u64 c = mul_mod(a.back(), lead_inv, p);
        poly_sub_scaled(a, m, c, shift, p);
    }
    return a;
}

Poly poly_divmod(Poly a, const Poly& m, u64 p, Poly& quotient) {
    poly_trim(a);
    const int dm = poly_deg(m);
    quotient.assign(poly_deg(a) >= dm ? static_cast<std::size_t>(poly_deg(a) - dm) + 1 : 0, 0);
    u64 lead_inv = inv_mod(m.back(), p);
    while (poly_deg(a) >= dm) {
        const std::size_t shift = static_cast<std::size_t>(poly_deg(a) - dm);
        const u64 c = mul_mod(a.back(), lead_inv, p);
        quotient[shift] = c;
        poly_sub_scaled(a, m, c, shift, p);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Inverse of a modulo m (m irreducible, a nonzero mod m), extended Euclid.
Poly poly_inv_mod(const Poly& a, const Poly& m, u64 p) {
    Poly old_r = m, r = poly_mod(a, m, p);
    Poly old_t = {}, t = {1};
    while (!r.empty()) {
        Poly q;
        Poly rem = poly_divmod(old_r, r, p, q);
        old_r = std::move(r);
        r = std::move(rem);
        Poly qt = poly_mul(q, t, p);
        // new_t = old_t - q * t
        Poly new_t = old_t;
        if (new_t.size() < qt.size()) new_t.resize(qt.size(), 0);
        for (std::size_t i = 0; i < qt.size(); ++i) {
            new_t[i] = add_mod(new_t[i], (p - qt[i]) % p, p);
        }
        poly_trim(new_t);
        old_t = std::move(t);
        t = std::move(new_t);
    }
    // old_r = gcd, a nonzero constant for irreducible m and a != 0.
    u64 c_inv = inv_mod(old_r.at(0), p);
    Poly result;
    for (u64 coeff : old_t) result.push_back(mul_mod(coeff, c_inv, p));
    poly_trim(result);
    return poly_mod(result, m, p);
}

// x^(p^d) mod f, by d rounds of Frobenius (raise to p) via square-and-multiply.
Poly poly_x_pow_pd(const Poly& f, u64 p, unsigned d) {
    Poly x = {0, 1};
    Poly g = poly_mod(x, f, p);
    for (unsigned round = 0; round < d; ++round) {
        Poly base = g;
        Poly acc = {1};
        u64 e = p;
        while (e) {
            if (e & 1) acc = poly_mod(poly_mul(acc, base, p), f, p);
            base = poly_mod(poly_mul(base, base, p), f, p);
            e >>= 1;
        }
        g = std::move(acc);
    }
    return g;
}

// Irreducibility over GF(p). Trial division against all monic polynomials of
// degree <= k/2 when there are few enough of them; beyond that threshold the
// same verdict is computed with the subfield-root test
// gcd(x^(p^d) - x, f) = 1, which detects exactly the factors of degree
// dividing d. Returns a factor through `factor_out` when reducible.
bool poly_irreducible(const Poly& f, u64 p, Poly* factor_out) {
    const int k = poly_deg(f);
    if (k < 1) return false;
    if (k == 1) return true;
    constexpr u64 kTrialLimit = 1 << 16;
    for (int d = 1; d <= k / 2; ++d) {
        // Count p^d with saturation.
        u128 count = 1;
        for (int i = 0; i < d && count <= kTrialLimit; ++i) count *= p;
        if (count <= kTrialLimit) {
            // Enumerate monic degree-d candidates by an odometer over the
            // d free coefficients.
            Poly g(static_cast<std::size_t>(d) + 1, 0);
            g.back() = 1;
            std::vector<u64> digits(static_cast<std::size_t>(d), 0);
            while (true) {
                for (int i = 0; i < d; ++i) g[static_cast<std::size_t>(i)] = digits[static_cast<std::size_t>(i)];
                if (poly_mod(f, g, p).empty()) {
                    if (factor_out) *factor_out = g;
                    return false;
                }
                int pos = 0;
                while (pos < d && ++digits[static_cast<std::size_t>(pos)] == p) {
                    digits[static_cast<std::size_t>(pos)] = 0;
                    ++pos;
                }
                if (pos == d) break;
            }
        } else {
            Poly xq = poly_x_pow_pd(f, p, static_cast<unsigned>(d));
            // xq - x
            Poly diff = xq;
            if (diff.size() < 2) diff.resize(2, 0);
            diff[1] = add_mod(diff[1], p - 1, p);
            poly_trim(diff);
            Poly g = poly_gcd(f, diff, p);
            if (poly_deg(g) >= 1) {
                if (factor_out) *factor_out = g;
                return false;
            }
        }
    }
    return true;
}

constexpr u64 kTableLimit = 256;  // fields up to this order get full op tables

}  // namespace

struct Field::Rep {
    u64 p = 0;
    unsigned k = 1;
    u64 q = 0;
    std::vector<u64> modulus;  // size k+1 for k > 1, empty otherwise

    bool has_tables = false;
    std::vector<u64> add_table;  // q*q
    std::vector<u64> mul_table;  // q*q
    std::vector<u64> neg_table;  // q
    std::vector<u64> inv_table;  // q (entry 0 unused)

    std::vector<u64> to_digits(u64 v) const {
        std::vector<u64> d(k);
        for (unsigned i = 0; i < k; ++i) {
            d[i] = v % p;
            v /= p;
        }
        return d;
    }

    u64 from_digits(const std::vector<u64>& d) const {
        u64 v = 0;
        for (unsigned i = k; i-- > 0;) v = v * p + (i < d.size() ? d[i] : 0);
        return v;
    }

    u64 add_general(u64 a, u64 b) const {
        if (k == 1) return add_mod(a, b, p);
        u64 r = 0, mult = 1;
        for (unsigned i = 0; i < k; ++i) {
            r += add_mod(a % p, b % p, p) * mult;
            a /= p;
            b /= p;
            mult *= p;
        }
        return r;
    }

    u64 neg_general(u64 a) const {
        if (k == 1) return a == 0 ? 0 : p - a;
        u64 r = 0, mult = 1;
        for (unsigned i = 0; i < k; ++i) {
            u64 d = a % p;
            r += (d == 0 ? 0 : p - d) * mult;
            a /= p;
            mult *= p;
        }
        return r;
    }

    u64 mul_general(u64 a, u64 b) const {
        if (k == 1) return mul_mod(a, b, p);
        Poly pa = to_digits(a), pb = to_digits(b);
        poly_trim(pa);
        poly_trim(pb);
        Poly prod = poly_mod(poly_mul(pa, pb, p), modulus, p);
        prod.resize(k, 0);
        return from_digits(prod);
    }

    u64 inv_general(u64 a) const {
        if (k == 1) return inv_mod(a, p);
        Poly pa = to_digits(a);
        poly_trim(pa);
        Poly r = poly_inv_mod(pa, modulus, p);
        r.resize(k, 0);
        return from_digits(r);
    }

    void build_tables() {
        if (q > kTableLimit) return;
        add_table.resize(q * q);
        mul_table.resize(q * q);
        neg_table.resize(q);
        inv_table.assign(q, 0);
        for (u64 a = 0; a < q; ++a) {
            neg_table[a] = neg_general(a);
            for (u64 b = 0; b < q; ++b) {
                add_table[a * q + b] = add_general(a, b);
                mul_table[a * q + b] = mul_general(a, b);
            }
            if (a != 0) inv_table[a] = inv_general(a);
        }
        has_tables = true;
    }
};

Field Field::prime(u64 p) {
    if (!is_prime(p)) {
        throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
    }
    auto rep = std::make_shared<Rep>();
    rep->p = p;
    rep->k = 1;
    rep->q = p;
    rep->build_tables();
    return Field(std::move(rep));
}

Field Field::extension(u64 p, unsigned degree, std::vector<u64> modulus) {
    if (!is_prime(p)) {
        throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
    }
    if (degree < 1) throw DomainError("extension degree must be at least 1");
    if (degree == 1) {
        if (!modulus.empty()) {
            throw DomainError("prime fields take no modulus polynomial");
        }
        return prime(p);
    }
    // q = p^degree must fit in a machine word.
    u128 q = 1;
    for (unsigned i = 0; i < degree; ++i) {
        q *= p;
        if (q > std::numeric_limits<u64>::max()) {
            throw DomainError("field order p^k does not fit in a machine word");
        }
    }
    if (modulus.size() != static_cast<std::size_t>(degree) + 1) {
        throw DomainError("modulus must have degree+1 coefficients, got " +
                          std::to_string(modulus.size()));
    }
    for (u64& c : modulus) {
        if (c >= p) throw DomainError("modulus coefficients must lie in [0, p)");
    }
    if (modulus.back() != 1) throw DomainError("modulus must be monic");
    Poly factor;
    if (!poly_irreducible(modulus, p, &factor)) {
        std::ostringstream os;
        os << "modulus is reducible over GF(" << p << "); divisible by a degree-"
           << poly_deg(factor) << " factor";
        throw DomainError(os.str());
    }
    auto rep = std::make_shared<Rep>();
    rep->p = p;
    rep->k = degree;
    rep->q = static_cast<u64>(q);
    rep->modulus = std::move(modulus);
    rep->build_tables();
    return Field(std::move(rep));
}

namespace {

// Built-in moduli for the small extension fields used throughout.
std::vector<u64> builtin_modulus(u64 p, unsigned k) {
    if (p == 2 && k == 2) return {1, 1, 1};     // x^2 + x + 1
    if (p == 2 && k == 3) return {1, 1, 0, 1};  // x^3 + x + 1
    if (p == 3 && k == 2) return {1, 0, 1};     // x^2 + 1
    return {};
}

u64 parse_u64(std::string_view s, const char* what) {
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw DomainError(std::string("invalid ") + what + " in field spec: '" + std::string(s) +
                          "'");
    }
    return v;
}

}  // namespace

Field Field::parse(std::string_view text) {
    if (text.empty()) throw DomainError("empty field spec");
    const auto caret = text.find('^');
    if (caret == std::string_view::npos) {
        return prime(parse_u64(text, "characteristic"));
    }
    const u64 p = parse_u64(text.substr(0, caret), "characteristic");
    std::string_view rest = text.substr(caret + 1);
    const auto colon = rest.find(':');
    const u64 k = parse_u64(colon == std::string_view::npos ? rest : rest.substr(0, colon),
                            "extension degree");
    if (k == 0 || k > 63) throw DomainError("extension degree out of range in field spec");
    std::vector<u64> modulus;
    if (colon != std::string_view::npos) {
        std::string_view coeffs = rest.substr(colon + 1);
        std::size_t pos = 0;
        while (pos <= coeffs.size()) {
            auto comma = coeffs.find(',', pos);
            if (comma == std::string_view::npos) comma = coeffs.size();
            modulus.push_back(parse_u64(coeffs.substr(pos, comma - pos), "modulus coefficient"));
            pos = comma + 1;
        }
    } else if (k > 1) {
        modulus = builtin_modulus(p, static_cast<unsigned>(k));
        if (modulus.empty()) {
            throw DomainError("no built-in modulus for GF(" + std::to_string(p) + "^" +
                              std::to_string(k) + "); supply one as p^k:c0,c1,...,ck");
        }
    }
    if (k == 1) {
        if (!modulus.empty()) throw DomainError("prime fields take no modulus polynomial");
        return prime(p);
    }
    return extension(p, static_cast<unsigned>(k), std::move(modulus));
}

std::uint64_t Field::characteristic() const { return rep_->p; }
unsigned Field::degree() const { return rep_->k; }
std::uint64_t Field::order() const { return rep_->q; }
const std::vector<std::uint64_t>& Field::modulus() const { return rep_->modulus; }

std::string Field::to_string() const {
    if (rep_->k == 1) return std::to_string(rep_->p);
    std::ostringstream os;
    os << rep_->p << '^' << rep_->k << ':';
    for (std::size_t i = 0; i < rep_->modulus.size(); ++i) {
        if (i) os << ',';
        os << rep_->modulus[i];
    }
    return os.str();
}

bool Field::operator==(const Field& other) const {
    if (rep_ == other.rep_) return true;
    return rep_->p == other.rep_->p && rep_->k == other.rep_->k &&
           rep_->modulus == other.rep_->modulus;
}

std::uint64_t Field::add(u64 a, u64 b) const {
    const Rep& r = *rep_;
    return r.has_tables ? r.add_table[a * r.q + b] : r.add_general(a, b);
}

std::uint64_t Field::neg(u64 a) const {
    const Rep& r = *rep_;
    return r.has_tables ? r.neg_table[a] : r.neg_general(a);
}

std::uint64_t Field::sub(u64 a, u64 b) const { return add(a, neg(b)); }

std::uint64_t Field::mul(u64 a, u64 b) const {
    const Rep& r = *rep_;
    return r.has_tables ? r.mul_table[a * r.q + b] : r.mul_general(a, b);
}

std::uint64_t Field::inv(u64 a) const {
    if (a == 0) {
        throw DomainError("division by zero in GF(" + std::to_string(rep_->q) + ")");
    }
    const Rep& r = *rep_;
    return r.has_tables ? r.inv_table[a] : r.inv_general(a);
}

std::uint64_t Field::div(u64 a, u64 b) const { return mul(a, inv(b)); }

std::uint64_t Field::pow(u64 a, u64 e) const {
    u64 result = 1;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::vector<std::uint64_t> Field::coefficients(u64 a) const { return rep_->to_digits(a); }

std::uint64_t Field::encode(const std::vector<std::int64_t>& coeffs) const {
    if (coeffs.size() != rep_->k) {
        throw DomainError("coefficient sequence must have length " + std::to_string(rep_->k));
    }
    const auto p = static_cast<std::int64_t>(rep_->p);
    std::vector<u64> digits(rep_->k);
    for (unsigned i = 0; i < rep_->k; ++i) {
        std::int64_t c = coeffs[i] % p;
        if (c < 0) c += p;
        digits[i] = static_cast<u64>(c);
    }
    return rep_->from_digits(digits);
}

FieldElement Field::element(u64 encoded) const {
    if (encoded >= rep_->q) {
        throw DomainError("encoded value " + std::to_string(encoded) + " outside GF(" +
                          std::to_string(rep_->q) + ")");
    }
    return FieldElement(*this, encoded);
}

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1 % rep_->q); }

std::string Field::format(u64 a) const {
    if (rep_->k == 1) return std::to_string(a);
    const auto digits = rep_->to_digits(a);
    std::ostringstream os;
    bool first = true;
    for (unsigned i = rep_->k; i-- > 0;) {
        const u64 c = digits[i];
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c;
            os << 'x';
            if (i > 1) os << '^' << i;
        }
    }
    if (first) os << '0';
    return os.str();
}

namespace {
void require_same_field(const Field& a, const Field& b) {
    if (a != b) throw DomainError("field elements belong to different fields");
}
}  // namespace

FieldElement::FieldElement(Field field, std::uint64_t value)
    : field_(std::move(field)), value_(value) {
    if (value_ >= field_.order()) {
        throw DomainError("encoded value outside field");
    }
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
    require_same_field(field_, other.field_);
    return FieldElement(field_, field_.add(value_, other.value_));
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
    require_same_field(field_, other.field_);
    return FieldElement(field_, field_.sub(value_, other.value_));
}

FieldElement FieldElement::operator*(const FieldElement& other) const {
    require_same_field(field_, other.field_);
    return FieldElement(field_, field_.mul(value_, other.value_));
}

FieldElement FieldElement::operator/(const FieldElement& other) const {
    require_same_field(field_, other.field_);
    return FieldElement(field_, field_.div(value_, other.value_));
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, field_.neg(value_)); }

FieldElement FieldElement::inverse() const { return FieldElement(field_, field_.inv(value_)); }

std::vector<FieldElement> enumerate_elements(const Field& field) {
    constexpr std::uint64_t kHardCap = std::uint64_t{1} << 26;
    if (field.order() > kHardCap) {
        throw BudgetError("refusing to materialize " + std::to_string(field.order()) +
                              " field elements (cap " + std::to_string(kHardCap) + ")",
                          kHardCap);
    }
    std::vector<FieldElement> out;
    out.reserve(field.order());
    for (std::uint64_t v = 0; v < field.order(); ++v) out.push_back(FieldElement(field, v));
    return out;
}

}  // namespace mqt
