#include "liemult/scalar.hpp"

namespace liemult {

namespace {

constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 61;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    while (e) {
        if (e & 1)
            r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid over signed 128-bit intermediates
    __int128 t = 0, new_t = 1;
    __int128 r = p, new_r = a;
    while (new_r != 0) {
        __int128 q = r / new_r;
        __int128 tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0)
        t += p;
    return static_cast<std::uint64_t>(t);
}

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0)
            return n == q;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

FieldSpec FieldSpec::rationals() { return FieldSpec{FieldKind::Rationals, 0}; }

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (p >= kMaxModulus)
        throw domain_error("prime field modulus must be < 2^61, got " +
                           std::to_string(p));
    if (!is_prime_u64(p))
        throw domain_error("prime field modulus must be prime, got " +
                           std::to_string(p));
    return FieldSpec{FieldKind::PrimeField, p};
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "Q")
        return rationals();
    if (text.rfind("Fp:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() ||
            digits.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("bad field spec '" + text + "'");
        return prime_field(std::stoull(digits));
    }
    throw parse_error("bad field spec '" + text + "' (expected Q or Fp:<prime>)");
}

std::string FieldSpec::to_string() const {
    if (kind == FieldKind::Rationals)
        return "Q";
    return "Fp:" + std::to_string(p);
}

Scalar Scalar::zero(const FieldSpec& fs) {
    Scalar s;
    s.spec_ = fs;
    return s;
}

Scalar Scalar::one(const FieldSpec& fs) { return from_int(1, fs); }

Scalar Scalar::from_int(long long m, const FieldSpec& fs) {
    Scalar s;
    s.spec_ = fs;
    if (fs.kind == FieldKind::Rationals) {
        s.rat_ = mpq_class(static_cast<long>(m));
    } else {
        long long r = m % static_cast<long long>(fs.p);
        if (r < 0)
            r += static_cast<long long>(fs.p);
        s.res_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::from_mpz(const mpz_class& m, const FieldSpec& fs) {
    Scalar s;
    s.spec_ = fs;
    if (fs.kind == FieldKind::Rationals) {
        s.rat_ = mpq_class(m);
    } else {
        mpz_class r = m % mpz_class(static_cast<unsigned long>(fs.p));
        if (r < 0)
            r += mpz_class(static_cast<unsigned long>(fs.p));
        s.res_ = r.get_ui();
    }
    return s;
}

Scalar Scalar::from_fraction(const mpz_class& num, const mpz_class& den,
                             const FieldSpec& fs) {
    if (den == 0)
        throw domain_error("zero denominator");
    if (fs.kind == FieldKind::Rationals) {
        Scalar s;
        s.spec_ = fs;
        mpq_class q(num, den);
        q.canonicalize();
        s.rat_ = q;
        return s;
    }
    return from_mpz(num, fs) / from_mpz(den, fs);
}

bool Scalar::is_zero() const {
    return spec_.kind == FieldKind::Rationals ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return spec_.kind == FieldKind::Rationals ? rat_ == 1 : res_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (!(spec_ == o.spec_))
        throw mismatch_error("scalar operands from different fields: " +
                             spec_.to_string() + " vs " + o.spec_.to_string());
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (spec_.kind == FieldKind::Rationals)
        s.rat_ = -rat_;
    else
        s.res_ = res_ == 0 ? 0 : spec_.p - res_;
    return s;
}

Scalar Scalar::inv() const {
    if (is_zero())
        throw domain_error("inversion of zero");
    Scalar s = *this;
    if (spec_.kind == FieldKind::Rationals)
        s.rat_ = 1 / rat_;
    else
        s.res_ = invmod(res_, spec_.p);
    return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    Scalar s = a;
    if (a.spec_.kind == FieldKind::Rationals) {
        s.rat_ = a.rat_ + b.rat_;
    } else {
        std::uint64_t r = a.res_ + b.res_; // p < 2^61, no overflow
        if (r >= a.spec_.p)
            r -= a.spec_.p;
        s.res_ = r;
    }
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    a.check_same_field(b);
    Scalar s = a;
    if (a.spec_.kind == FieldKind::Rationals)
        s.rat_ = a.rat_ * b.rat_;
    else
        s.res_ = mulmod(a.res_, b.res_, a.spec_.p);
    return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

bool Scalar::operator==(const Scalar& o) const {
    if (!(spec_ == o.spec_))
        return false;
    return spec_.kind == FieldKind::Rationals ? rat_ == o.rat_
                                              : res_ == o.res_;
}

std::string Scalar::to_string() const {
    if (spec_.kind == FieldKind::Rationals)
        return rat_.get_str();
    return std::to_string(res_);
}

} // namespace liemult
