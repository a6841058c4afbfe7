#ifndef LIEMULT_SCALAR_HPP
#define LIEMULT_SCALAR_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "liemult/errors.hpp"

namespace liemult {

enum class FieldKind { Rationals, PrimeField };

/// Arithmetic context: the rationals, or a prime field F_p with p < 2^61.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    std::uint64_t p = 0; // modulus, PrimeField only

    static FieldSpec rationals();
    static FieldSpec prime_field(std::uint64_t p);

    /// Accepts "Q" or "Fp:<prime>" (the config syntax).
    static FieldSpec parse(const std::string& text);

    std::uint64_t characteristic() const {
        return kind == FieldKind::PrimeField ? p : 0;
    }
    std::string to_string() const;
    bool operator==(const FieldSpec&) const = default;
};

bool is_prime_u64(std::uint64_t n);

/// Exact field element. Rationals are kept in lowest terms with positive
/// denominator (GMP canonical form); prime-field residues live in [0, p).
class Scalar {
  public:
    Scalar() : spec_(FieldSpec::rationals()) {}

    static Scalar zero(const FieldSpec& fs);
    static Scalar one(const FieldSpec& fs);
    /// Canonical image of an integer; zero exactly when char(k) divides m.
    static Scalar from_int(long long m, const FieldSpec& fs);
    static Scalar from_mpz(const mpz_class& m, const FieldSpec& fs);
    /// num/den with exact division (den inverted in F_p).
    static Scalar from_fraction(const mpz_class& num, const mpz_class& den,
                                const FieldSpec& fs);

    const FieldSpec& field() const { return spec_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    /// Multiplicative inverse; rejects zero.
    Scalar inv() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;

    std::string to_string() const;

    /// Underlying value, valid only for the matching kind.
    const mpq_class& rational() const { return rat_; }
    std::uint64_t residue() const { return res_; }

  private:
    FieldSpec spec_;
    mpq_class rat_;
    std::uint64_t res_ = 0;

    void check_same_field(const Scalar& o) const;
};

} // namespace liemult

#endif
