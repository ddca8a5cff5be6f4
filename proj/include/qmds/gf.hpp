#ifndef QMDS_GF_HPP
#define QMDS_GF_HPP

// Exact arithmetic in GF(q^2) with its distinguished subfield GF(q), q = p^e.
//
// A FieldCtx pins down one concrete representation of GF(p^{2e}): the
// lexicographically smallest monic degree-2e polynomial over GF(p) that is
// irreducible and primitive, so the residue class of the indeterminate is a
// generator g of the multiplicative group. Nonzero elements are stored as
// discrete logarithms of g, and dense exp/log tables make multiplication,
// conjugation, norm and trace O(1) (addition costs one base-p digit loop).
// Contexts are immutable after construction and safe to share across threads.

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace qmds {

/// An element of GF(q^2): zero, or g^k with 0 <= k < q^2-1. Plain value type;
/// all arithmetic lives on FieldCtx.
class Elem {
  public:
    constexpr Elem() = default;  // zero
    static constexpr Elem zero() { return Elem(); }

    constexpr bool is_zero() const { return exp_ < 0; }

    /// Discrete log of a nonzero element.
    int64_t exponent() const {
        if (is_zero()) throw std::logic_error("zero has no discrete logarithm");
        return exp_;
    }

    friend constexpr bool operator==(Elem, Elem) = default;

  private:
    friend class FieldCtx;
    explicit constexpr Elem(int32_t e) : exp_(e) {}
    int32_t exp_ = -1;
};

inline constexpr int64_t kDefaultFieldCap = int64_t{1} << 20;

class FieldCtx {
  public:
    /// Builds GF(p^{2e}). Deterministic: the same (p, e) always yields the
    /// same modulus and the same generator. Throws std::invalid_argument for
    /// non-prime p, e < 1, or p^{2e} above the cap.
    FieldCtx(int64_t p, int64_t e, int64_t cap = kDefaultFieldCap);

    int64_t p() const { return p_; }
    int64_t e() const { return e_; }
    int64_t q() const { return q_; }
    int64_t q2() const { return q2_; }

    /// Modulus coefficients low-to-high, length 2e+1, monic.
    const std::vector<int32_t>& modulus() const { return modulus_; }

    Elem zero() const { return Elem::zero(); }
    Elem one() const { return Elem(0); }
    Elem generator() const { return Elem(1); }

    /// g^k for any integer k, reduced into the canonical range.
    Elem from_exponent(int64_t k) const {
        return Elem(static_cast<int32_t>(((k % n_) + n_) % n_));
    }

    /// 0, g^0, g^1, ..., g^{q^2-2}.
    std::vector<Elem> all_elements() const {
        std::vector<Elem> out;
        out.reserve(static_cast<size_t>(q2_));
        out.push_back(Elem::zero());
        for (int64_t k = 0; k < n_; ++k) out.push_back(Elem(static_cast<int32_t>(k)));
        return out;
    }

    // --- arithmetic ---

    Elem add(Elem a, Elem b) const {
        check(a);
        check(b);
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int64_t pa = exp_packed_[static_cast<size_t>(a.exp_)];
        int64_t pb = exp_packed_[static_cast<size_t>(b.exp_)];
        int64_t r;
        if (p_ == 2) {
            r = pa ^ pb;
        } else {
            r = 0;
            for (int64_t place = 1; pa != 0 || pb != 0; place *= p_) {
                r += ((pa + pb) % p_) * place;
                pa /= p_;
                pb /= p_;
            }
        }
        if (r == 0) return Elem::zero();
        return Elem(log_of_packed_[static_cast<size_t>(r)]);
    }

    Elem neg(Elem a) const {
        check(a);
        if (a.is_zero() || p_ == 2) return a;
        return Elem(static_cast<int32_t>((a.exp_ + n_ / 2) % n_));  // -1 = g^{(q^2-1)/2}
    }

    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem mul(Elem a, Elem b) const {
        check(a);
        check(b);
        if (a.is_zero() || b.is_zero()) return Elem::zero();
        return Elem(static_cast<int32_t>((static_cast<int64_t>(a.exp_) + b.exp_) % n_));
    }

    Elem inv(Elem a) const {
        check(a);
        if (a.is_zero()) throw std::invalid_argument("division by zero");
        return Elem(static_cast<int32_t>((n_ - a.exp_) % n_));
    }

    Elem div(Elem a, Elem b) const {
        check(a);
        check(b);
        if (b.is_zero()) throw std::invalid_argument("division by zero");
        if (a.is_zero()) return Elem::zero();
        return Elem(static_cast<int32_t>(((static_cast<int64_t>(a.exp_) - b.exp_) % n_ + n_) % n_));
    }

    /// a^n for any integer n; exponents reduce mod q^2-1. 0^0 = 1 (empty
    /// product), 0^n = 0 for n > 0, and negative powers of zero are a
    /// division by zero.
    Elem pow(Elem a, int64_t n) const {
        check(a);
        if (a.is_zero()) {
            if (n == 0) return one();
            if (n < 0) throw std::invalid_argument("division by zero");
            return Elem::zero();
        }
        int64_t r = ((n % n_) + n_) % n_;
        return Elem(static_cast<int32_t>((a.exp_ * r) % n_));
    }

    // --- the GF(q^2)/GF(q) structure maps ---

    /// x -> x^q, the conjugation fixing exactly GF(q). An involution.
    Elem frobenius(Elem a) const {
        check(a);
        if (a.is_zero()) return a;
        return Elem(static_cast<int32_t>((a.exp_ * q_) % n_));
    }

    /// Tr(x) = x + x^q, a GF(q)-linear surjection onto GF(q).
    Elem trace(Elem a) const { return add(a, frobenius(a)); }

    /// N(x) = x^{q+1}; restricted to nonzero elements, a surjection onto
    /// GF(q)* with fibers of size q+1.
    Elem norm(Elem a) const {
        check(a);
        if (a.is_zero()) return a;
        return Elem(static_cast<int32_t>((a.exp_ * (q_ + 1)) % n_));
    }

    /// True iff x^q = x, i.e. x = 0 or (q+1) divides the exponent.
    bool in_subfield(Elem a) const {
        check(a);
        return a.is_zero() || a.exp_ % (q_ + 1) == 0;
    }

    /// The canonical (smallest-exponent) v with v^{q+1} = a, for a in GF(q)*.
    Elem norm_preimage(Elem a) const {
        check(a);
        if (a.is_zero() || !in_subfield(a))
            throw std::invalid_argument("norm preimage requires a nonzero element of GF(q)");
        return Elem(static_cast<int32_t>(a.exp_ / (q_ + 1)));
    }

    /// The multiplicative subgroup of the given order, listed as
    /// g^s, g^{2s}, ..., g^{order*s} = 1 with s = (q^2-1)/order.
    std::vector<Elem> subgroup_elements(int64_t order) const {
        if (order < 1 || n_ % order != 0)
            throw std::invalid_argument("subgroup order must divide q^2-1");
        const int64_t step = n_ / order;
        std::vector<Elem> out;
        out.reserve(static_cast<size_t>(order));
        for (int64_t k = 1; k <= order; ++k)
            out.push_back(Elem(static_cast<int32_t>((step * k) % n_)));
        return out;
    }

    /// Sum of h^exp over the given subgroup. Equals (|H| mod p) * 1 when |H|
    /// divides exp and 0 otherwise; callers use it as a geometric-sum oracle.
    Elem power_sum_over_subgroup(std::span<const Elem> subgroup, int64_t exp) const {
        Elem acc = Elem::zero();
        for (Elem h : subgroup) acc = add(acc, pow(h, exp));
        return acc;
    }

    // --- canonical serialization ---

    /// "0", or "g^k" with k in the canonical range.
    std::string to_string(Elem a) const {
        check(a);
        if (a.is_zero()) return "0";
        return "g^" + std::to_string(a.exp_);
    }

    Elem parse(std::string_view s) const {
        if (s == "0") return Elem::zero();
        if (s.size() < 3 || s.substr(0, 2) != "g^")
            throw std::invalid_argument("malformed element literal: " + std::string(s));
        int64_t k = 0;
        for (char c : s.substr(2)) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("malformed element literal: " + std::string(s));
            k = k * 10 + (c - '0');
            if (k >= n_) throw std::invalid_argument("element exponent out of canonical range");
        }
        return Elem(static_cast<int32_t>(k));
    }

    friend bool operator==(const FieldCtx& a, const FieldCtx& b) {
        return a.p_ == b.p_ && a.e_ == b.e_;
    }

  private:
    void check(Elem a) const {
        if (!a.is_zero() && a.exp_ >= n_)
            throw std::invalid_argument("element does not belong to this field context");
    }

    int64_t p_ = 0;
    int64_t e_ = 0;
    int64_t q_ = 0;
    int64_t q2_ = 0;
    int64_t n_ = 0;  // q^2 - 1
    std::vector<int32_t> modulus_;       // degree 2e, monic, low-to-high
    std::vector<int64_t> pp_;            // powers of p up to p^{2e}
    std::vector<int32_t> exp_packed_;    // exponent -> packed coefficient vector
    std::vector<int32_t> log_of_packed_; // packed -> exponent, -1 for zero
};

namespace detail {

inline bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace detail

inline FieldCtx::FieldCtx(int64_t p, int64_t e, int64_t cap) : p_(p), e_(e) {
    if (!detail::is_prime(p)) throw std::invalid_argument("p must be prime");
    if (e < 1) throw std::invalid_argument("e must be positive");
    if (cap < 4) throw std::invalid_argument("field cap too small");

    q_ = 1;
    for (int64_t i = 0; i < e_; ++i) {
        q_ *= p_;
        if (q_ > (int64_t{1} << 31)) throw std::invalid_argument("field size exceeds cap");
    }
    q2_ = q_ * q_;
    if (q2_ > cap) throw std::invalid_argument("field size exceeds cap");
    n_ = q2_ - 1;

    const int d = static_cast<int>(2 * e_);
    pp_.resize(static_cast<size_t>(d) + 1);
    pp_[0] = 1;
    for (int i = 1; i <= d; ++i) pp_[static_cast<size_t>(i)] = pp_[static_cast<size_t>(i - 1)] * p_;

    // Scan monic candidates x^{2e} + c_{2e-1}x^{2e-1} + ... + c_0 in
    // lexicographic order of the low-to-high coefficient list (c_0, ..., c_{2e-1})
    // and accept the first one for which x has multiplicative order exactly
    // q^2-1. That order certifies irreducibility and primitivity at once: the
    // q^2-1 distinct powers of x together with 0 exhaust the quotient ring,
    // so it is a field and x generates its nonzero elements. Candidates with
    // c_0 = 0 are divisible by x and skipped up front.
    std::vector<int32_t> coeffs(static_cast<size_t>(d));
    std::vector<int32_t> work(static_cast<size_t>(d));
    std::vector<int32_t> exp_try(static_cast<size_t>(n_));
    bool found = false;

    auto pack = [&](const std::vector<int32_t>& w) {
        int64_t r = 0;
        for (int i = 0; i < d; ++i) r += w[static_cast<size_t>(i)] * pp_[static_cast<size_t>(i)];
        return r;
    };

    for (int64_t cand = pp_[static_cast<size_t>(d - 1)]; cand < q2_ && !found; ++cand) {
        for (int i = 0; i < d; ++i)
            coeffs[static_cast<size_t>(i)] =
                static_cast<int32_t>((cand / pp_[static_cast<size_t>(d - 1 - i)]) % p_);

        std::fill(work.begin(), work.end(), 0);
        work[1] = 1;  // w = x
        exp_try[0] = 1;
        bool reject = false;
        for (int64_t k = 1; k < n_; ++k) {
            const int64_t packed = pack(work);
            if (packed == 1) {  // ord(x) = k < q^2-1
                reject = true;
                break;
            }
            exp_try[static_cast<size_t>(k)] = static_cast<int32_t>(packed);
            // w *= x mod f
            const int32_t carry = work[static_cast<size_t>(d - 1)];
            for (int i = d - 1; i > 0; --i) work[static_cast<size_t>(i)] = work[static_cast<size_t>(i - 1)];
            work[0] = 0;
            if (carry != 0) {
                for (int i = 0; i < d; ++i) {
                    const int64_t t = work[static_cast<size_t>(i)] -
                                      static_cast<int64_t>(carry) * coeffs[static_cast<size_t>(i)];
                    work[static_cast<size_t>(i)] = static_cast<int32_t>(((t % p_) + p_) % p_);
                }
            }
        }
        if (!reject && pack(work) == 1) {
            found = true;
            modulus_.assign(coeffs.begin(), coeffs.end());
            modulus_.push_back(1);
            exp_packed_ = exp_try;
        }
    }
    if (!found) throw std::logic_error("no primitive polynomial of the required degree exists");

    log_of_packed_.assign(static_cast<size_t>(q2_), -1);
    for (int64_t k = 0; k < n_; ++k)
        log_of_packed_[static_cast<size_t>(exp_packed_[static_cast<size_t>(k)])] =
            static_cast<int32_t>(k);
}

}  // namespace qmds

#endif  // QMDS_GF_HPP
