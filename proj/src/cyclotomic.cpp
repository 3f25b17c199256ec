#include "mq/cyclotomic.hpp"

#include <numeric>

#include <nlohmann/json.hpp>

namespace mq {

namespace {

// quotient of exact polynomial division (coefficients ascending)
std::vector<Rational> poly_div_exact(std::vector<Rational> num, const std::vector<Rational>& den) {
    std::vector<Rational> q(num.size() - den.size() + 1, Rational(0));
    for (int i = (int)q.size() - 1; i >= 0; --i) {
        Rational c = num[i + den.size() - 1] / den.back();
        q[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j)
            num[i + j] -= c * den[j];
    }
    for (const auto& r : num)
        if (r != 0) throw validation_error("inexact polynomial division");
    return q;
}

// remainder modulo a monic polynomial
std::vector<Rational> poly_mod(std::vector<Rational> num, const std::vector<Rational>& den) {
    while (num.size() >= den.size()) {
        Rational c = num.back();
        if (c != 0)
            for (size_t j = 0; j < den.size(); ++j)
                num[num.size() - den.size() + j] -= c * den[j];
        num.pop_back();
    }
    return num;
}

} // namespace

int euler_phi(int N) {
    int phi = N, n = N;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            phi -= phi / p;
            while (n % p == 0) n /= p;
        }
    if (n > 1) phi -= phi / n;
    return phi;
}

std::vector<Rational> cyclotomic_polynomial(int N) {
    if (N < 1) throw validation_error("cyclotomic order must be positive");
    // x^N - 1 divided by the product of Phi_d over proper divisors d
    std::vector<Rational> num(N + 1, Rational(0));
    num[0] = -1;
    num[N] = 1;
    for (int d = 1; d < N; ++d)
        if (N % d == 0) num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    return num;
}

Cyclotomic::Cyclotomic(int N) : order_(N), coeffs_(euler_phi(N), Rational(0)) {
    if (N < 1) throw validation_error("cyclotomic order must be positive");
}

Cyclotomic::Cyclotomic(int N, const std::vector<Rational>& coeffs) : Cyclotomic(N) {
    auto reduced = poly_mod(coeffs, cyclotomic_polynomial(N));
    for (size_t i = 0; i < reduced.size(); ++i) coeffs_[i] = reduced[i];
}

Cyclotomic Cyclotomic::from_rational(int N, const Rational& r) {
    Cyclotomic c(N);
    if (!c.coeffs_.empty()) c.coeffs_[0] = r;
    else if (r != 0) throw validation_error("nonzero constant needs phi(N) >= 1");
    return c;
}

Cyclotomic Cyclotomic::zeta_power(int N, long long e) {
    e %= N;
    if (e < 0) e += N;
    std::vector<Rational> mono(e + 1, Rational(0));
    mono[e] = 1;
    return Cyclotomic(N, mono);
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    if (order_ != o.order_) throw validation_error("cyclotomic order mismatch");
    Cyclotomic out(order_);
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return out;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    if (order_ != o.order_) throw validation_error("cyclotomic order mismatch");
    Cyclotomic out(order_);
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    if (order_ != o.order_) throw validation_error("cyclotomic order mismatch");
    if (coeffs_.empty()) return Cyclotomic(order_);
    std::vector<Rational> prod(2 * coeffs_.size(), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j)
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return Cyclotomic(order_, prod);
}

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
    Cyclotomic out(order_);
    for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] = coeffs_[i] * r;
    return out;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    return order_ == o.order_ && coeffs_ == o.coeffs_;
}

Cyclotomic Cyclotomic::conj() const {
    Cyclotomic out(order_);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        out = out + zeta_power(order_, -(long long)i) * coeffs_[i];
    }
    return out;
}

Cyclotomic Cyclotomic::to_order(int M) const {
    if (M == order_) return *this;
    if (M % order_ != 0) throw validation_error("cyclotomic order does not divide target");
    Cyclotomic out(M);
    long long step = M / order_;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        out = out + zeta_power(M, step * (long long)i) * coeffs_[i];
    }
    return out;
}

bool Cyclotomic::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw validation_error("cyclotomic value is not rational");
    return coeffs_.empty() ? Rational(0) : coeffs_[0];
}

nlohmann::json cyclotomic_to_json(const Cyclotomic& c) {
    auto coeffs = nlohmann::json::array();
    for (const auto& r : c.coeffs()) coeffs.push_back(rational_to_string(r));
    return {{"N", c.order()}, {"coeffs", coeffs}};
}

Cyclotomic cyclotomic_from_json(const nlohmann::json& j) {
    if (!j.contains("N") || !j.contains("coeffs"))
        throw validation_error("cyclotomic document needs 'N' and 'coeffs'");
    int N = j.at("N").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& e : j.at("coeffs")) coeffs.push_back(rational_from_string(e.get<std::string>()));
    return Cyclotomic(N, coeffs);
}

} // namespace mq
