#include "bifrob/field.hpp"

#include <array>
#include <cctype>

namespace bifrob {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(u128(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Inverse of a mod p, p prime, a != 0 (extended Euclid).
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
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
    return static_cast<std::uint64_t>(t);
}

std::uint64_t residue_of_mpz(const mpz_class& z, std::uint64_t p) {
    mpz_class m = z % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    return m.get_ui();
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for all 64-bit integers.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

void validate_field(const FieldSpec& field) {
    if (field.characteristic == 0) return;
    if (field.characteristic > kMaxCharacteristic)
        throw std::invalid_argument("field characteristic exceeds 2^61");
    if (!is_prime_u64(field.characteristic))
        throw std::invalid_argument("field characteristic must be 0 or a prime");
}

Scalar Scalar::zero(const FieldSpec& field) {
    Scalar s;
    s.field_ = field;
    return s;
}

Scalar Scalar::one(const FieldSpec& field) {
    return from_int(field, 1);
}

Scalar Scalar::from_int(const FieldSpec& field, long long value) {
    Scalar s;
    s.field_ = field;
    if (field.is_rational()) {
        s.rational_ = mpq_class(mpz_class(value));
    } else {
        mpz_class z(value);
        s.residue_ = residue_of_mpz(z, field.characteristic);
    }
    return s;
}

std::optional<Scalar> Scalar::parse(const FieldSpec& field, std::string_view text) {
    auto is_digits = [](std::string_view v) {
        if (v.empty()) return false;
        for (char c : v)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    bool negative = false;
    std::string_view body = text;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    std::string_view num = body, den;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        num = body.substr(0, slash);
        den = body.substr(slash + 1);
        if (!is_digits(den)) return std::nullopt;
    }
    if (!is_digits(num)) return std::nullopt;

    mpz_class n(std::string(num), 10);
    if (negative) n = -n;
    mpz_class d = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (d == 0) return std::nullopt;

    Scalar s;
    s.field_ = field;
    if (field.is_rational()) {
        s.rational_ = mpq_class(n, d);
        s.rational_.canonicalize();
    } else {
        std::uint64_t p = field.characteristic;
        std::uint64_t dn = residue_of_mpz(d, p);
        if (dn == 0) return std::nullopt;
        s.residue_ = mulmod_u64(residue_of_mpz(n, p), invmod_u64(dn, p), p);
    }
    return s;
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? rational_ == 0 : residue_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? rational_ == 1 : residue_ == 1 % field_.characteristic;
}

void Scalar::require_same_field(const Scalar& rhs) const {
    if (field_ != rhs.field_)
        throw std::invalid_argument("scalar arithmetic across distinct fields");
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_field(rhs);
    Scalar out;
    out.field_ = field_;
    if (field_.is_rational()) {
        out.rational_ = rational_ + rhs.rational_;
    } else {
        std::uint64_t p = field_.characteristic;
        std::uint64_t sum = residue_ + rhs.residue_; // p < 2^61, no overflow
        out.residue_ = sum >= p ? sum - p : sum;
    }
    return out;
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    return *this + (-rhs);
}

Scalar Scalar::operator-() const {
    Scalar out;
    out.field_ = field_;
    if (field_.is_rational()) {
        out.rational_ = -rational_;
    } else {
        out.residue_ = residue_ == 0 ? 0 : field_.characteristic - residue_;
    }
    return out;
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_field(rhs);
    Scalar out;
    out.field_ = field_;
    if (field_.is_rational()) {
        out.rational_ = rational_ * rhs.rational_;
    } else {
        out.residue_ = mulmod_u64(residue_, rhs.residue_, field_.characteristic);
    }
    return out;
}

std::optional<Scalar> Scalar::inverse() const {
    if (is_zero()) return std::nullopt;
    Scalar out;
    out.field_ = field_;
    if (field_.is_rational()) {
        out.rational_ = 1 / rational_;
    } else {
        out.residue_ = invmod_u64(residue_, field_.characteristic);
    }
    return out;
}

Scalar Scalar::operator/(const Scalar& rhs) const {
    require_same_field(rhs);
    auto inv = rhs.inverse();
    if (!inv) throw std::domain_error("scalar division by zero");
    return *this * *inv;
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (field_ != rhs.field_) return false;
    return field_.is_rational() ? rational_ == rhs.rational_ : residue_ == rhs.residue_;
}

std::string Scalar::str() const {
    if (!field_.is_rational()) return std::to_string(residue_);
    return rational_.get_str();
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rational())
        throw std::logic_error("rational payload requested in prime characteristic");
    return rational_;
}

} // namespace bifrob
