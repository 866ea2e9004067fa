#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cfklab {

/// Laurent polynomial over GF(2): a finite set of exponents of t with
/// coefficient 1. Addition is symmetric difference of supports, multiplication
/// is convolution mod 2. The zero polynomial has empty support.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return monomial(0); }
    static LaurentPoly monomial(int k) {
        LaurentPoly p;
        p.exps_ = {k};
        return p;
    }
    /// Builds from an arbitrary exponent list; repeated exponents cancel.
    static LaurentPoly from_exponents(std::vector<int> exps) {
        std::sort(exps.begin(), exps.end());
        LaurentPoly p;
        for (int e : exps) {
            if (!p.exps_.empty() && p.exps_.back() == e)
                p.exps_.pop_back();
            else
                p.exps_.push_back(e);
        }
        return p;
    }

    const std::vector<int>& exponents() const { return exps_; }

    bool is_zero() const { return exps_.empty(); }
    bool is_one() const { return exps_.size() == 1 && exps_[0] == 0; }
    /// Units of GF(2)[t, t^-1] are exactly the monomials.
    bool is_unit() const { return exps_.size() == 1; }

    int min_exp() const { require_nonzero(); return exps_.front(); }
    int max_exp() const { require_nonzero(); return exps_.back(); }
    /// Width max_exp - min_exp; the Euclidean size function for this ring.
    int width() const { require_nonzero(); return exps_.back() - exps_.front(); }

    /// GF(2)-dimension viewpoint: number of nonzero coefficients.
    int support_size() const { return static_cast<int>(exps_.size()); }

    /// Evaluation at t = 1, landing in GF(2).
    bool eval_at_one() const { return exps_.size() % 2 == 1; }

    LaurentPoly shifted(int k) const {
        LaurentPoly p = *this;
        for (int& e : p.exps_) e += k;
        return p;
    }
    /// Unit-normalized representative with min_exp 0.
    LaurentPoly normalized() const {
        if (is_zero()) return *this;
        return shifted(-min_exp());
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        std::set_symmetric_difference(a.exps_.begin(), a.exps_.end(),
                                      b.exps_.begin(), b.exps_.end(),
                                      std::back_inserter(r.exps_));
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<int> prods;
        prods.reserve(a.exps_.size() * b.exps_.size());
        for (int e : a.exps_)
            for (int f : b.exps_)
                prods.push_back(e + f);
        return from_exponents(std::move(prods));
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Euclidean division a = q*b + r with r == 0 or width(r) < width(b).
    static std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a,
                                                      const LaurentPoly& b) {
        if (b.is_zero()) throw std::invalid_argument("laurent division by zero");
        if (a.is_zero()) return {zero(), zero()};
        const int va = a.min_exp(), vb = b.min_exp();
        // Dense bit vectors of the unit-normalized polynomials, indexed by degree.
        std::vector<char> rem = a.normalized().dense();
        const std::vector<char> div = b.normalized().dense();
        const int db = static_cast<int>(div.size()) - 1;
        std::vector<int> q_exps;
        for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
            if (!rem[d]) continue;
            q_exps.push_back(d - db);
            for (int j = 0; j <= db; ++j)
                rem[d - db + j] ^= div[j];
        }
        LaurentPoly q = from_exponents(std::move(q_exps)).shifted(va - vb);
        std::vector<int> r_exps;
        for (int d = 0; d < static_cast<int>(rem.size()); ++d)
            if (rem[d]) r_exps.push_back(d + va);
        return {q, from_exponents(std::move(r_exps))};
    }

    static bool divides(const LaurentPoly& d, const LaurentPoly& a) {
        if (a.is_zero()) return true;
        if (d.is_zero()) return false;
        return divmod(a, d).second.is_zero();
    }

    /// Exact quotient; throws if the division leaves a remainder.
    static LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::invalid_argument("inexact laurent division");
        return q;
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (int e : exps_) {
            if (!s.empty()) s += "+";
            if (e == 0) s += "1";
            else if (e == 1) s += var;
            else s += var + "^" + std::to_string(e);
        }
        return s;
    }

private:
    void require_nonzero() const {
        if (exps_.empty()) throw std::logic_error("zero laurent polynomial has no degree data");
    }
    std::vector<char> dense() const {
        std::vector<char> bits(static_cast<std::size_t>(exps_.back()) + 1, 0);
        for (int e : exps_) bits[static_cast<std::size_t>(e)] = 1;
        return bits;
    }

    std::vector<int> exps_; // sorted, duplicate-free
};

} // namespace cfklab
