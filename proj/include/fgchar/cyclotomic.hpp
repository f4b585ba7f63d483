#pragma once

#include <gmpxx.h>

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fgchar/errors.hpp"

namespace fgchar {

/// Largest conductor accepted by CycNum arithmetic.
inline constexpr int kMaxConductor = 2520;

namespace detail {

using IntPoly = std::vector<mpz_class>;  // ascending coefficients

/// Exact division of integer polynomials; divisor monic.
inline IntPoly poly_divide_exact(IntPoly num, const IntPoly& den) {
    const std::size_t dn = den.size() - 1;
    if (num.size() < den.size()) return {mpz_class(0)};
    IntPoly q(num.size() - dn);
    for (std::size_t i = num.size(); i-- > dn;) {
        mpz_class c = num[i];
        q[i - dn] = c;
        if (c != 0)
            for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
    }
    return q;
}

/// Per-conductor data: the cyclotomic polynomial and x^k mod Phi_e for k < e.
struct CycContext {
    int e = 1;
    int degree = 1;
    IntPoly phi;
    std::vector<IntPoly> xpow;  // each of length `degree`
};

inline std::shared_ptr<const CycContext> build_context(int e);

inline const IntPoly& cyclotomic_polynomial(int e) {
    static std::mutex mutex;
    static std::map<int, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
    }
    IntPoly p(static_cast<std::size_t>(e) + 1, mpz_class(0));
    p[0] = -1;
    p[e] = 1;
    for (int d = 1; d < e; ++d)
        if (e % d == 0) p = poly_divide_exact(std::move(p), cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lock(mutex);
    return cache.try_emplace(e, std::move(p)).first->second;
}

inline std::shared_ptr<const CycContext> context(int e) {
    if (e < 1 || e > kMaxConductor) fail(ErrorCode::ConductorOverflow, "conductor " + std::to_string(e) + " exceeds " + std::to_string(kMaxConductor));
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const CycContext>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
    }
    auto ctx = build_context(e);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.try_emplace(e, std::move(ctx)).first->second;
}

inline std::shared_ptr<const CycContext> build_context(int e) {
    auto ctx = std::make_shared<CycContext>();
    ctx->e = e;
    ctx->phi = cyclotomic_polynomial(e);
    const int d = static_cast<int>(ctx->phi.size()) - 1;
    ctx->degree = d;
    ctx->xpow.resize(static_cast<std::size_t>(e));
    for (int k = 0; k < e; ++k) {
        IntPoly v(static_cast<std::size_t>(d), mpz_class(0));
        if (k < d) {
            v[k] = 1;
        } else {
            // x * x^(k-1): shift, then fold the x^d term using Phi monic
            const IntPoly& prev = ctx->xpow[k - 1];
            mpz_class top = prev[d - 1];
            for (int i = d - 1; i > 0; --i) v[i] = prev[i - 1];
            v[0] = 0;
            if (top != 0)
                for (int i = 0; i < d; ++i) v[i] -= top * ctx->phi[i];
        }
        ctx->xpow[k] = std::move(v);
    }
    return ctx;
}

}  // namespace detail

/// Exact element of Q(zeta_e): coefficients of 1, z, ..., z^(d-1), d = phi(e),
/// reduced modulo the e-th cyclotomic polynomial.
class CycNum {
public:
    CycNum() : CycNum(0) {}
    CycNum(long v) : e_(1), coeffs_{mpq_class(v)} {}  // NOLINT(google-explicit-constructor)
    CycNum(const mpq_class& v) : e_(1), coeffs_{v} { coeffs_[0].canonicalize(); }  // NOLINT(google-explicit-constructor)

    /// zeta_e^k
    static CycNum root(int e, long long k) {
        auto ctx = detail::context(e);
        long long r = ((k % e) + e) % e;
        CycNum out;
        out.e_ = e;
        out.coeffs_.assign(static_cast<std::size_t>(ctx->degree), mpq_class(0));
        const auto& v = ctx->xpow[static_cast<std::size_t>(r)];
        for (int i = 0; i < ctx->degree; ++i) out.coeffs_[i] = v[i];
        return out;
    }

    /// Builds sum_k c[k] zeta_e^k for an arbitrary-length coefficient list (k < e).
    static CycNum from_powers(int e, const std::vector<mpq_class>& c) {
        auto ctx = detail::context(e);
        CycNum out;
        out.e_ = e;
        out.coeffs_.assign(static_cast<std::size_t>(ctx->degree), mpq_class(0));
        for (std::size_t k = 0; k < c.size(); ++k) {
            if (c[k] == 0) continue;
            const auto& v = ctx->xpow[k % static_cast<std::size_t>(e)];
            for (int i = 0; i < ctx->degree; ++i)
                if (v[i] != 0) out.coeffs_[i] += c[k] * v[i];
        }
        for (auto& x : out.coeffs_) x.canonicalize();
        return out;
    }

    /// Reads canonical coefficients directly; the length must be phi(e).
    static CycNum from_canonical(int e, std::vector<mpq_class> coeffs) {
        auto ctx = detail::context(e);
        if (static_cast<int>(coeffs.size()) != ctx->degree)
            fail(ErrorCode::InvalidInput, "expected " + std::to_string(ctx->degree) + " coefficients for conductor " + std::to_string(e));
        CycNum out;
        out.e_ = e;
        out.coeffs_ = std::move(coeffs);
        for (auto& x : out.coeffs_) x.canonicalize();
        return out;
    }

    int conductor() const noexcept { return e_; }
    const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }

    /// Same number in Q(zeta_target); e must divide target.
    CycNum embed(int target) const {
        if (target == e_) return *this;
        if (target % e_) fail(ErrorCode::InvalidInput, "cannot embed conductor " + std::to_string(e_) + " into " + std::to_string(target));
        const int step = target / e_;
        std::vector<mpq_class> c(static_cast<std::size_t>(target), mpq_class(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
        return from_powers(target, c);
    }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    std::optional<mpq_class> is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return std::nullopt;
        return coeffs_[0];
    }

    /// zeta -> zeta^-1
    CycNum conj() const {
        if (e_ <= 2) return *this;
        std::vector<mpq_class> c(static_cast<std::size_t>(e_), mpq_class(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) c[(e_ - static_cast<int>(i)) % e_] = coeffs_[i];
        return from_powers(e_, c);
    }

    /// Galois image zeta -> zeta^k, k coprime to the conductor.
    CycNum galois(int k) const {
        std::vector<mpq_class> c(static_cast<std::size_t>(e_), mpq_class(0));
        long long kk = ((k % e_) + e_) % e_;
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) c[static_cast<std::size_t>((static_cast<long long>(i) * kk) % e_)] += coeffs_[i];
        return from_powers(e_, c);
    }

    CycNum abs_square() const { return *this * conj(); }

    friend CycNum operator+(const CycNum& a, const CycNum& b) {
        const int e = common(a, b);
        CycNum x = a.embed(e), y = b.embed(e);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
        return x;
    }
    friend CycNum operator-(const CycNum& a, const CycNum& b) {
        const int e = common(a, b);
        CycNum x = a.embed(e), y = b.embed(e);
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] -= y.coeffs_[i];
        return x;
    }
    friend CycNum operator-(CycNum a) {
        for (auto& c : a.coeffs_) c = -c;
        return a;
    }
    friend CycNum operator*(const CycNum& a, const CycNum& b) {
        if (a.e_ == 1) return b.scaled(a.coeffs_[0]);
        if (b.e_ == 1) return a.scaled(b.coeffs_[0]);
        const int e = common(a, b);
        CycNum x = a.embed(e), y = b.embed(e);
        std::vector<mpq_class> buf(static_cast<std::size_t>(e), mpq_class(0));
        for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
            if (x.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < y.coeffs_.size(); ++j)
                if (y.coeffs_[j] != 0) buf[(i + j) % static_cast<std::size_t>(e)] += x.coeffs_[i] * y.coeffs_[j];
        }
        return from_powers(e, buf);
    }
    CycNum& operator+=(const CycNum& o) { return *this = *this + o; }
    CycNum& operator-=(const CycNum& o) { return *this = *this - o; }
    CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

    CycNum scaled(mpq_class r) const {
        r.canonicalize();
        CycNum out = *this;
        for (auto& c : out.coeffs_) c *= r;
        return out;
    }

    friend bool operator==(const CycNum& a, const CycNum& b) {
        if (a.e_ == b.e_) return a.coeffs_ == b.coeffs_;
        const int e = common(a, b);
        return a.embed(e).coeffs_ == b.embed(e).coeffs_;
    }
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

    /// Numeric lexicographic order on (conductor, coefficients); used for row sorting.
    friend bool canonical_less(const CycNum& a, const CycNum& b) {
        if (a.e_ != b.e_) return a.e_ < b.e_;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            int c = cmp(a.coeffs_[i], b.coeffs_[i]);
            if (c) return c < 0;
        }
        return false;
    }

    /// Sum of c_i E(e)^i, e.g. "1 + 2*E(8)^3".
    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const mpq_class& c = coeffs_[i];
            if (c == 0) continue;
            std::string term;
            mpq_class mag = abs(c);
            if (i == 0) {
                term = mag.get_str();
            } else {
                if (mag != 1) term = mag.get_str() + "*";
                term += "E(" + std::to_string(e_) + ")";
                if (i > 1) term += "^" + std::to_string(i);
            }
            if (out.empty())
                out = (c < 0 ? "-" : "") + term;
            else
                out += (c < 0 ? " - " : " + ") + term;
        }
        return out.empty() ? "0" : out;
    }

    friend std::ostream& operator<<(std::ostream& os, const CycNum& a) { return os << a.to_string(); }

private:
    static int common(const CycNum& a, const CycNum& b) {
        long long l = std::lcm(static_cast<long long>(a.e_), static_cast<long long>(b.e_));
        if (l > kMaxConductor) fail(ErrorCode::ConductorOverflow, "conductor " + std::to_string(l) + " exceeds " + std::to_string(kMaxConductor));
        return static_cast<int>(l);
    }

    int e_ = 1;
    std::vector<mpq_class> coeffs_;
};

}  // namespace fgchar
