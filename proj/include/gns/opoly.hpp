#pragma once

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gns/matrix.hpp"
#include "gns/numeric.hpp"
#include "gns/order.hpp"

namespace gns {

class ZeroConstantTermError : public Error {
public:
    ZeroConstantTermError() : Error("polynomial has zero constant term") {}
};

// Integer polynomial, coefficients low-to-high. Zero is the empty vector;
// otherwise the leading coefficient is nonzero.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static ZPoly constant(const Int& c) { return ZPoly({c}); }

    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    Int operator()(const Int& x) const {
        Int acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    bool operator==(const ZPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const ZPoly& o) const { return !(*this == o); }

    ZPoly operator*(const ZPoly& o) const {
        if (is_zero() || o.is_zero()) return ZPoly();
        std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
        return ZPoly(std::move(out));
    }

    ZPoly operator+(const ZPoly& o) const {
        std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
        return ZPoly(std::move(out));
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            if (coeffs_[i] == 0) continue;
            if (!first) os << (coeffs_[i] > 0 ? " + " : " - ");
            else if (coeffs_[i] < 0) os << "-";
            Int a = abs_int(coeffs_[i]);
            if (a != 1 || i == 0) os << a.str();
            if (i >= 1) os << "x";
            if (i >= 2) os << "^" << i;
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Int> coeffs_;
};

// Monic polynomial over an order, coefficients low-to-high.
class OPoly {
public:
    OPoly(Order order, std::vector<OElem> coeffs) : order_(std::move(order)), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() < 2) throw SpecError("polynomial must have degree >= 1");
        for (const auto& c : coeffs_)
            if (c.order() != order_) throw SpecError("coefficient belongs to a different order");
        if (coeffs_.back() != OElem::one(order_)) throw SpecError("polynomial must be monic");
    }

    static OPoly from_zpoly(const Order& o, const ZPoly& p) {
        std::vector<OElem> cs;
        cs.reserve(p.degree() + 1);
        for (std::size_t i = 0; i <= p.degree(); ++i) cs.push_back(OElem::from_int(o, p.coeff(i)));
        return OPoly(o, std::move(cs));
    }

    const Order& order() const { return order_; }
    std::size_t degree() const { return coeffs_.size() - 1; }
    const OElem& coeff(std::size_t i) const { return coeffs_[i]; }
    const OElem& constant_term() const { return coeffs_[0]; }
    const std::vector<OElem>& coeffs() const { return coeffs_; }

    bool operator==(const OPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const OPoly& o) const { return !(*this == o); }

    // Requires every coefficient to be a rational integer (rank-1 coords).
    ZPoly to_zpoly() const {
        std::vector<Int> cs(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const Coords& c = coeffs_[i].coords();
            for (std::size_t l = 1; l < c.size(); ++l)
                if (c[l] != 0) throw SpecError("coefficient is not a rational integer");
            cs[i] = c[0];
        }
        return ZPoly(std::move(cs));
    }

private:
    Order order_;
    std::vector<OElem> coeffs_;
};

inline OElem poly_eval(const OPoly& p, const OElem& a) {
    OElem acc = OElem::zero(p.order());
    for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * a + p.coeff(i);
    return acc;
}

// Synthetic division by (x - a): p = (x - a) * quotient + remainder.
inline std::pair<std::vector<OElem>, OElem> divide_linear(const std::vector<OElem>& p, const OElem& a) {
    const std::size_t m = p.size() - 1;
    std::vector<OElem> q(m, OElem::zero(a.order()));
    OElem carry = p[m];
    for (std::size_t i = m; i-- > 0;) {
        q[i] = carry;
        carry = p[i] + a * carry;
    }
    return {std::move(q), std::move(carry)};
}

// p(x + a), computed by repeated synthetic division so every coefficient
// stays in the order (no factorials).
inline OPoly taylor_shift(const OPoly& p, const OElem& a) {
    std::vector<OElem> work = p.coeffs();
    std::vector<OElem> out;
    out.reserve(work.size());
    while (work.size() > 1) {
        auto [q, r] = divide_linear(work, a);
        out.push_back(r);
        work = std::move(q);
    }
    out.push_back(work[0]);  // leading 1
    return OPoly(p.order(), std::move(out));
}

// Matrix of f -> x*f on O[x]/(p) in the basis {w_i x^j}, j outer: block
// subdiagonal identities and last block column -P_0..-P_{n-1} with
// P_i = mul_matrix(p_i).
inline IntMatrix companion_operator(const OPoly& p) {
    const std::size_t d = p.order().rank();
    const std::size_t n = p.degree();
    IntMatrix phi(n * d, n * d);
    for (std::size_t j = 0; j + 1 < n; ++j)
        for (std::size_t i = 0; i < d; ++i) phi((j + 1) * d + i, j * d + i) = 1;
    for (std::size_t l = 0; l < n; ++l) {
        const IntMatrix pl = mul_matrix(p.coeff(l));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t k = 0; k < d; ++k) phi(l * d + i, (n - 1) * d + k) = -pl(i, k);
    }
    return phi;
}

// The integer polynomial Np: characteristic polynomial of the companion
// operator. Monic of degree n*d with |Np(0)| = |norm(p_0)|.
inline ZPoly np_polynomial(const OPoly& p) { return ZPoly(charpoly(companion_operator(p))); }

namespace detail {

// All roots of c (low-to-high, leading nonzero) strictly inside the unit
// disk, by the Schur-Cohn reduction. Any boundary case fails the strict
// inequality and yields false.
inline bool schur_stable(std::vector<Int> c) {
    while (c.size() > 1) {
        const Int a0 = c.front();
        const Int an = c.back();
        if (abs_int(a0) >= abs_int(an)) return false;
        const std::size_t n = c.size() - 1;
        std::vector<Int> next(n);
        for (std::size_t j = 0; j < n; ++j) next[j] = an * c[j + 1] - a0 * c[n - 1 - j];
        c = std::move(next);  // leading entry an^2 - a0^2 != 0
    }
    return true;
}

}  // namespace detail

// True iff every complex root of P has modulus strictly greater than 1,
// decided exactly on the reversed polynomial.
inline bool is_expansive(const ZPoly& p) {
    if (!p.is_monic()) throw SpecError("expansiveness test requires a monic polynomial");
    if (p.coeff(0) == 0) throw ZeroConstantTermError();
    std::vector<Int> reversed(p.coeffs().rbegin(), p.coeffs().rend());
    return detail::schur_stable(std::move(reversed));
}

}  // namespace gns
