#pragma once

#include <cstddef>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gns/matrix.hpp"
#include "gns/numeric.hpp"

namespace gns {

using Coords = std::vector<Int>;

struct OrderViolation {
    enum class Kind { Dimension, Unit, Commutativity, Associativity };
    Kind kind;
    std::size_t i = 0, j = 0, k = 0;  // 1-based basis indices involved
    std::string detail;
};

struct ValidationReport {
    std::vector<OrderViolation> violations;
    bool valid() const { return violations.empty(); }
};

// Multiplication table: table[i][j] is the coordinate vector of w_{i+1}*w_{j+1}
// in the basis w_1..w_d, with w_1 = 1.
using MulTable = std::vector<std::vector<Coords>>;

// A commutative ring with 1 whose additive group is Z^d, given by its
// multiplication table. Immutable after construction; cheap to copy.
class Order {
public:
    static ValidationReport validate(std::size_t rank, const MulTable& table) {
        ValidationReport rep;
        if (rank < 1) {
            rep.violations.push_back({OrderViolation::Kind::Dimension, 0, 0, 0, "rank must be >= 1"});
            return rep;
        }
        if (table.size() != rank) {
            rep.violations.push_back({OrderViolation::Kind::Dimension, 0, 0, 0, "table has wrong row count"});
            return rep;
        }
        for (std::size_t i = 0; i < rank; ++i) {
            if (table[i].size() != rank) {
                rep.violations.push_back({OrderViolation::Kind::Dimension, i + 1, 0, 0, "table row has wrong length"});
                return rep;
            }
            for (std::size_t j = 0; j < rank; ++j)
                if (table[i][j].size() != rank) {
                    rep.violations.push_back({OrderViolation::Kind::Dimension, i + 1, j + 1, 0, "entry has wrong coordinate count"});
                    return rep;
                }
        }

        const auto unit_vec = [&](std::size_t l) {
            Coords e(rank, Int(0));
            e[l] = 1;
            return e;
        };
        for (std::size_t j = 0; j < rank; ++j) {
            if (table[0][j] != unit_vec(j))
                rep.violations.push_back({OrderViolation::Kind::Unit, 1, j + 1, 0, "w1 * wj must equal wj"});
            if (table[j][0] != unit_vec(j))
                rep.violations.push_back({OrderViolation::Kind::Unit, j + 1, 1, 0, "wj * w1 must equal wj"});
        }
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = i + 1; j < rank; ++j)
                if (table[i][j] != table[j][i])
                    rep.violations.push_back({OrderViolation::Kind::Commutativity, i + 1, j + 1, 0, "wi*wj != wj*wi"});

        // (wi*wj)*wk vs wi*(wj*wk), both expanded through the table.
        const auto mul_basis = [&](const Coords& x, std::size_t k) {
            Coords out(rank, Int(0));
            for (std::size_t l = 0; l < rank; ++l) {
                if (x[l] == 0) continue;
                for (std::size_t m = 0; m < rank; ++m) out[m] += x[l] * table[l][k][m];
            }
            return out;
        };
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < rank; ++j)
                for (std::size_t k = 0; k < rank; ++k) {
                    const Coords lhs = mul_basis(table[i][j], k);
                    Coords rhs(rank, Int(0));
                    for (std::size_t l = 0; l < rank; ++l) {
                        if (table[j][k][l] == 0) continue;
                        for (std::size_t m = 0; m < rank; ++m) rhs[m] += table[j][k][l] * table[i][l][m];
                    }
                    if (lhs != rhs)
                        rep.violations.push_back({OrderViolation::Kind::Associativity, i + 1, j + 1, k + 1,
                                                  "(wi*wj)*wk != wi*(wj*wk)"});
                }
        return rep;
    }

    static Order create(std::size_t rank, MulTable table, std::vector<std::string> labels = {}) {
        ValidationReport rep = validate(rank, table);
        if (!rep.valid()) {
            std::ostringstream os;
            os << "invalid multiplication table (" << rep.violations.size() << " violation(s)): "
               << rep.violations.front().detail;
            throw SpecError(os.str());
        }
        if (labels.empty()) {
            labels.reserve(rank);
            labels.emplace_back("1");
            for (std::size_t i = 2; i <= rank; ++i) labels.push_back("w" + std::to_string(i));
        }
        auto data = std::make_shared<const Data>(Data{rank, std::move(table), std::move(labels)});
        return Order(std::move(data));
    }

    std::size_t rank() const { return data_->rank; }
    const MulTable& table() const { return data_->table; }
    const std::string& label(std::size_t i) const { return data_->labels[i]; }

    bool operator==(const Order& o) const {
        return data_ == o.data_ || (data_->rank == o.data_->rank && data_->table == o.data_->table);
    }
    bool operator!=(const Order& o) const { return !(*this == o); }

private:
    struct Data {
        std::size_t rank;
        MulTable table;
        std::vector<std::string> labels;
    };
    explicit Order(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    std::shared_ptr<const Data> data_;
};

// Element of an order: integer coordinates in the w-basis.
class OElem {
public:
    OElem(Order order, Coords coords) : order_(std::move(order)), coords_(std::move(coords)) {
        if (coords_.size() != order_.rank()) throw SpecError("coordinate count does not match order rank");
    }

    static OElem zero(const Order& o) { return OElem(o, Coords(o.rank(), Int(0))); }
    static OElem one(const Order& o) { return from_int(o, Int(1)); }
    static OElem from_int(const Order& o, const Int& m) {
        Coords c(o.rank(), Int(0));
        c[0] = m;
        return OElem(o, c);
    }
    static OElem basis(const Order& o, std::size_t i) {
        Coords c(o.rank(), Int(0));
        c[i] = 1;
        return OElem(o, c);
    }

    const Order& order() const { return order_; }
    const Coords& coords() const { return coords_; }
    std::size_t rank() const { return coords_.size(); }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }

    Int inf_norm() const {
        Int best(0);
        for (const auto& c : coords_) {
            Int a = abs_int(c);
            if (a > best) best = a;
        }
        return best;
    }

    bool operator==(const OElem& o) const { return coords_ == o.coords_ && order_ == o.order_; }
    bool operator!=(const OElem& o) const { return !(*this == o); }

    // Lexicographic coordinate order; used wherever deterministic output
    // requires sorting elements.
    bool operator<(const OElem& o) const { return coords_ < o.coords_; }

    OElem operator+(const OElem& o) const {
        check_same(o);
        Coords c = coords_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
        return OElem(order_, std::move(c));
    }

    OElem operator-(const OElem& o) const {
        check_same(o);
        Coords c = coords_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
        return OElem(order_, std::move(c));
    }

    OElem operator-() const {
        Coords c = coords_;
        for (auto& x : c) x = -x;
        return OElem(order_, std::move(c));
    }

    OElem operator*(const OElem& o) const {
        check_same(o);
        const std::size_t d = rank();
        const MulTable& t = order_.table();
        Coords out(d, Int(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (coords_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (o.coords_[j] == 0) continue;
                const Int f = coords_[i] * o.coords_[j];
                for (std::size_t l = 0; l < d; ++l) out[l] += f * t[i][j][l];
            }
        }
        return OElem(order_, std::move(out));
    }

    OElem operator*(const Int& s) const {
        Coords c = coords_;
        for (auto& x : c) x *= s;
        return OElem(order_, std::move(c));
    }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) os << ",";
            os << coords_[i];
        }
        os << ")";
        return os.str();
    }

private:
    void check_same(const OElem& o) const {
        if (order_ != o.order_) throw SpecError("elements belong to different orders");
    }
    Order order_;
    Coords coords_;
};

// Matrix of x -> a*x in the w-basis; column j holds the coords of a*w_j.
inline IntMatrix mul_matrix(const OElem& a) {
    const std::size_t d = a.rank();
    IntMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const OElem col = a * OElem::basis(a.order(), j);
        for (std::size_t i = 0; i < d; ++i) m(i, j) = col.coords()[i];
    }
    return m;
}

inline Int norm(const OElem& a) { return det_bareiss(mul_matrix(a)); }

inline bool is_zero_divisor(const OElem& a) { return norm(a) == 0; }

// Precomputed data for working modulo a fixed non-zero-divisor theta:
// residue indexing through the Smith normal form of mul_matrix(theta) and
// exact division by theta.
class ModulusContext {
public:
    explicit ModulusContext(OElem theta) : theta_(std::move(theta)), m_(mul_matrix(theta_)) {
        const Int det = det_bareiss(m_);
        if (det == 0) throw ZeroDivisorError("modulus has norm 0");
        norm_abs_ = abs_int(det);
        snf_ = smith_normal_form(m_);
        auto inv = rat_inverse(to_rational(m_));
        inv_ = std::move(*inv);  // nonsingular: det != 0
        weights_.resize(snf_.divisors.size());
        Int w(1);
        for (std::size_t i = 0; i < snf_.divisors.size(); ++i) {
            weights_[i] = w;
            w *= snf_.divisors[i];
        }
    }

    const OElem& theta() const { return theta_; }
    const Int& norm_abs() const { return norm_abs_; }
    const IntMatrix& matrix() const { return m_; }

    // Canonical residue index in [0, |norm|); equal indices iff congruent
    // modulo theta*O.
    Int index_of(const OElem& a) const {
        const std::size_t d = a.rank();
        Int idx(0);
        for (std::size_t i = 0; i < d; ++i) {
            Int c(0);
            for (std::size_t j = 0; j < d; ++j) c += snf_.u(i, j) * a.coords()[j];
            idx += floor_mod(c, snf_.divisors[i]) * weights_[i];
        }
        return idx;
    }

    // One representative per class, deterministic: SNF coordinates run over
    // [0, s_i) in mixed-radix order and are mapped back through U^{-1}.
    std::vector<OElem> representatives() const {
        const std::size_t d = theta_.rank();
        auto uinv = rat_inverse(to_rational(snf_.u));
        IntMatrix uinv_int(d, d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                uinv_int(i, j) = boost::multiprecision::numerator((*uinv)(i, j));  // unimodular

        std::vector<OElem> out;
        out.reserve(static_cast<std::size_t>(norm_abs_));
        Coords snf_coord(d, Int(0));
        for (Int count(0); count < norm_abs_; ++count) {
            Coords rep(d, Int(0));
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) rep[i] += uinv_int(i, j) * snf_coord[j];
            out.emplace_back(theta_.order(), std::move(rep));
            for (std::size_t i = 0; i < d; ++i) {  // mixed-radix increment
                if (++snf_coord[i] < snf_.divisors[i]) break;
                snf_coord[i] = 0;
            }
        }
        return out;
    }

    // Unique beta with theta*beta = a, or NotDivisibleError.
    OElem divide(const OElem& a) const {
        const std::size_t d = a.rank();
        std::vector<Rat> rhs(d);
        for (std::size_t i = 0; i < d; ++i) rhs[i] = Rat(a.coords()[i]);
        const std::vector<Rat> x = inv_ * rhs;
        Coords c(d);
        for (std::size_t i = 0; i < d; ++i) {
            if (boost::multiprecision::denominator(x[i]) != 1)
                throw NotDivisibleError(a.str() + " is not divisible by " + theta_.str());
            c[i] = boost::multiprecision::numerator(x[i]);
        }
        return OElem(a.order(), std::move(c));
    }

    // Exact coordinates of theta^{-1} * a in O tensor R.
    std::vector<Rat> divide_rational(const OElem& a) const {
        std::vector<Rat> rhs(a.rank());
        for (std::size_t i = 0; i < a.rank(); ++i) rhs[i] = Rat(a.coords()[i]);
        return inv_ * rhs;
    }

private:
    OElem theta_;
    IntMatrix m_;
    Int norm_abs_;
    SmithForm snf_;
    RatMatrix inv_;
    std::vector<Int> weights_;
};

inline std::vector<OElem> residues_mod(const OElem& theta) {
    return ModulusContext(theta).representatives();
}

inline Int canonical_residue(const OElem& a, const OElem& theta) {
    return ModulusContext(theta).index_of(a);
}

inline OElem solve_divide(const OElem& a, const OElem& theta) {
    return ModulusContext(theta).divide(a);
}

}  // namespace gns
