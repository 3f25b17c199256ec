#ifndef MQ_CYCLOTOMIC_HPP
#define MQ_CYCLOTOMIC_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mq/rational.hpp"

namespace mq {

/// Monic integer polynomial whose roots are the primitive N-th roots of
/// unity; coefficients ascending, degree = Euler phi(N).
std::vector<Rational> cyclotomic_polynomial(int N);

int euler_phi(int N);

/// Element of Q(zeta_N), stored as a rational polynomial in zeta_N reduced
/// modulo the N-th cyclotomic polynomial (so equality is coefficientwise).
class Cyclotomic {
public:
    explicit Cyclotomic(int N);                              // zero
    Cyclotomic(int N, const std::vector<Rational>& coeffs);  // reduced on entry

    static Cyclotomic from_rational(int N, const Rational& r);
    static Cyclotomic zeta_power(int N, long long e);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator*(const Rational& r) const;
    bool operator==(const Cyclotomic& o) const;

    /// Complex conjugation, zeta -> zeta^{-1}.
    Cyclotomic conj() const;

    /// Embeds into Q(zeta_M) for N | M via zeta_N -> zeta_M^{M/N}.
    Cyclotomic to_order(int M) const;

    bool is_rational() const;
    Rational rational_value() const; // throws when not rational

private:
    int order_;
    std::vector<Rational> coeffs_; // length phi(order_)
};

nlohmann::json cyclotomic_to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const nlohmann::json& j);

} // namespace mq

#endif
