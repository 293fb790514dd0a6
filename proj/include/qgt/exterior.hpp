#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qgt/numeric.hpp"
#include "qgt/rational.hpp"

namespace qgt::ext {

// Scalar of the form a + b*sqrt(s) with rational-complex a, b and rational
// s > 0. Closed under the ring operations, which keeps Clifford words with
// the c_s / \hat{c}_s normalization exact.
struct ExactScalar {
    RationalComplex a;
    RationalComplex b;
    Rational s{1};

    ExactScalar() = default;
    ExactScalar(Rational r) : a(r) {}
    ExactScalar(long long n) : a(Rational(n)) {}
    ExactScalar(RationalComplex r) : a(r) {}

    static ExactScalar sqrt_of(Rational s_param) {
        ExactScalar x;
        x.b = RationalComplex(Rational(1));
        x.s = s_param;
        canonicalize(x);
        return x;
    }
    static ExactScalar inv_sqrt_of(Rational s_param) {
        ExactScalar x;
        x.b = RationalComplex(Rational(1) / s_param);
        x.s = s_param;
        canonicalize(x);
        return x;
    }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    double to_double_real() const {
        return a.re.to_double() + b.re.to_double() * std::sqrt(s.to_double());
    }

    friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
        ExactScalar r;
        r.a = x.a + y.a;
        r.b = x.b + y.b;
        r.s = merge_s(x, y);
        canonicalize(r);
        return r;
    }
    friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
        return x + (-y);
    }
    friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
        const Rational s = merge_s(x, y);
        ExactScalar r;
        r.a = x.a * y.a + x.b * y.b * RationalComplex(s);
        r.b = x.a * y.b + x.b * y.a;
        r.s = s;
        canonicalize(r);
        return r;
    }
    ExactScalar operator-() const {
        ExactScalar r = *this;
        r.a = -r.a;
        r.b = -r.b;
        return r;
    }
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }

    friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
        return (x - y).is_zero();
    }

    std::string str() const {
        if (b.is_zero()) return a.str();
        return a.str() + " + " + b.str() + "*sqrt(" + s.str() + ")";
    }

  private:
    // Fold sqrt(s) into the rational part when s is a perfect square.
    static void canonicalize(ExactScalar& x) {
        if (x.b.is_zero()) {
            x.s = Rational(1);
            return;
        }
        const auto root = [](long long v) -> long long {
            if (v < 0) return -1;
            long long r = std::llround(std::sqrt(static_cast<double>(v)));
            for (long long c = r - 2; c <= r + 2; ++c)
                if (c >= 0 && c * c == v) return c;
            return -1;
        };
        const long long rn = root(x.s.num()), rd = root(x.s.den());
        if (rn >= 0 && rd >= 0) {
            const RationalComplex f{Rational(rn, rd)};
            x.a += x.b * f;
            x.b = RationalComplex{};
            x.s = Rational(1);
        }
    }

    static Rational merge_s(const ExactScalar& x, const ExactScalar& y) {
        if (x.b.is_zero()) return y.s;
        if (y.b.is_zero()) return x.s;
        if (!(x.s == y.s))
            throw std::invalid_argument("ExactScalar: mixing different sqrt parameters");
        return x.s;
    }
};

inline bool scalar_is_zero(const ExactScalar& x) { return x.is_zero(); }
inline bool scalar_is_zero(const complexd& z) { return z == complexd(0.0, 0.0); }

// Element of the double exterior algebra Lambda(T*X) (x) Lambda(hat T*X) in
// dimension m. Basis monomials are indexed by a pair of bitmasks (unhatted in
// the low m bits, hatted in the next m), in the canonical order
// e^{i1}^...^e^{ik} ^ \hat{e}^{j1}^...^\hat{e}^{jl} with ascending indices.
// Exact instantiations carry a global power pi^{pi_half/2} so that the
// Berezin normalization stays symbolic.
template <typename Scalar>
class SuperElement {
  public:
    explicit SuperElement(int m) : m_(m), coeffs_(std::size_t{1} << (2 * m)) {
        if (m < 1 || m > 8) throw std::invalid_argument("SuperElement: dimension out of range");
    }

    static SuperElement unit(int m, Scalar c = Scalar(1)) {
        SuperElement x(m);
        x.coeffs_[0] = c;
        return x;
    }
    // Single wedge monomial with the given masks.
    static SuperElement monomial(int m, std::uint32_t umask, std::uint32_t hmask,
                                 Scalar c = Scalar(1)) {
        SuperElement x(m);
        x.at(umask, hmask) = c;
        return x;
    }

    int dim() const { return m_; }
    int pi_half = 0;

    Scalar& at(std::uint32_t umask, std::uint32_t hmask) {
        return coeffs_[index(umask, hmask)];
    }
    const Scalar& at(std::uint32_t umask, std::uint32_t hmask) const {
        return coeffs_[index(umask, hmask)];
    }

    std::size_t index(std::uint32_t umask, std::uint32_t hmask) const {
        return umask | (hmask << m_);
    }
    std::uint32_t umask_of(std::size_t idx) const { return idx & ((1u << m_) - 1); }
    std::uint32_t hmask_of(std::size_t idx) const { return idx >> m_; }

    const std::vector<Scalar>& coeffs() const { return coeffs_; }
    std::vector<Scalar>& coeffs() { return coeffs_; }

    bool is_zero() const {
        for (const Scalar& c : coeffs_)
            if (!scalar_is_zero(c)) return false;
        return true;
    }

    SuperElement& operator+=(const SuperElement& o) {
        check_compatible(o);
        if (o.is_zero()) return *this;
        if (is_zero()) pi_half = o.pi_half;
        if (pi_half != o.pi_half)
            throw std::invalid_argument("SuperElement: adding mixed pi powers");
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    friend SuperElement operator+(SuperElement x, const SuperElement& y) { return x += y; }
    SuperElement operator-() const {
        SuperElement r = *this;
        for (Scalar& c : r.coeffs_) c = -c;
        return r;
    }
    friend SuperElement operator-(const SuperElement& x, const SuperElement& y) {
        return x + (-y);
    }

    SuperElement& operator*=(const Scalar& c) {
        for (Scalar& v : coeffs_) v = v * c;
        return *this;
    }
    friend SuperElement operator*(SuperElement x, const Scalar& c) { return x *= c; }
    friend SuperElement operator*(const Scalar& c, SuperElement x) { return x *= c; }

    SuperElement wedge(const SuperElement& o) const {
        check_compatible(o);
        SuperElement r(m_);
        r.pi_half = pi_half + o.pi_half;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (scalar_is_zero(coeffs_[i])) continue;
            const std::uint32_t u1 = umask_of(i), h1 = hmask_of(i);
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
                if (scalar_is_zero(o.coeffs_[j])) continue;
                const std::uint32_t u2 = o.umask_of(j), h2 = o.hmask_of(j);
                if ((u1 & u2) || (h1 & h2)) continue;
                int inv = merge_inversions(u1, u2) + merge_inversions(h1, h2);
                // Moving the unhatted part of o past the hatted part of *this.
                inv += std::popcount(h1) * std::popcount(u2);
                Scalar term = coeffs_[i] * o.coeffs_[j];
                if (inv & 1) term = -term;
                r.coeffs_[r.index(u1 | u2, h1 | h2)] += term;
            }
        }
        return r;
    }

    // Z2-degree of a basis index.
    int parity(std::size_t idx) const {
        return std::popcount(static_cast<std::uint32_t>(idx)) & 1;
    }

  private:
    static int merge_inversions(std::uint32_t left, std::uint32_t right) {
        int inv = 0;
        std::uint32_t r = right;
        while (r) {
            const int b = std::countr_zero(r);
            inv += std::popcount(left >> (b + 1));
            r &= r - 1;
        }
        return inv;
    }

    void check_compatible(const SuperElement& o) const {
        if (m_ != o.m_) throw std::invalid_argument("SuperElement: dimension mismatch");
    }

    int m_;
    std::vector<Scalar> coeffs_;
};

using ExactElement = SuperElement<ExactScalar>;
using ComplexElement = SuperElement<complexd>;

// Primitive generators acting on elements.
enum class PrimKind { WedgeU, ContractU, WedgeH, ContractH };

struct Primitive {
    PrimKind kind;
    int j;  // 1-based index
};

template <typename Scalar>
SuperElement<Scalar> apply_primitive(const Primitive& prim, const SuperElement<Scalar>& x) {
    const int m = x.dim();
    if (prim.j < 1 || prim.j > m) throw std::out_of_range("apply_primitive: index");
    const std::uint32_t bit = 1u << (prim.j - 1);
    SuperElement<Scalar> r(m);
    r.pi_half = x.pi_half;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        const Scalar& c = x.coeffs()[i];
        if (scalar_is_zero(c)) continue;
        const std::uint32_t u = x.umask_of(i), h = x.hmask_of(i);
        std::uint32_t nu = u, nh = h;
        int inv = 0;
        switch (prim.kind) {
            case PrimKind::WedgeU:
                if (u & bit) continue;
                inv = std::popcount(u & (bit - 1));
                nu = u | bit;
                break;
            case PrimKind::ContractU:
                if (!(u & bit)) continue;
                inv = std::popcount(u & (bit - 1));
                nu = u & ~bit;
                break;
            case PrimKind::WedgeH:
                if (h & bit) continue;
                inv = std::popcount(u) + std::popcount(h & (bit - 1));
                nh = h | bit;
                break;
            case PrimKind::ContractH:
                if (!(h & bit)) continue;
                inv = std::popcount(u) + std::popcount(h & (bit - 1));
                nh = h & ~bit;
                break;
        }
        Scalar term = c;
        if (inv & 1) term = -term;
        r.at(nu, nh) += term;
    }
    return r;
}

// A sum of scalar-weighted words of primitives; words act right-to-left.
struct SuperOperator {
    struct Term {
        ExactScalar coeff;
        std::vector<Primitive> word;
    };
    std::vector<Term> terms;

    ExactElement apply(const ExactElement& x) const;
};

SuperOperator compose(const SuperOperator& f, const SuperOperator& g);

// Clifford generators c_s(e_j) = s^{-1/2} e^j^ - s^{1/2} i_{e_j} and
// \hat{c}_s(e_j) = s^{-1/2} e^j^ + s^{1/2} i_{e_j}, both acting on the
// unhatted factor; the hat transfer moves \hat{c}_s to the hatted copy.
SuperOperator clifford(Rational s, int j, bool hatted);

// Anticommutator [A, B] = AB + BA (both generators are odd).
SuperOperator anticommutator(const SuperOperator& f, const SuperOperator& g);

// Supertrace over the single algebra Lambda(T*X) (hatted slot empty).
ExactScalar supertrace(const SuperOperator& op, int m);

// Words in the c / \hat{c} alphabet, with the s parameter fixed per word.
struct CliffordAtom {
    bool hatted;  // \hat{c} vs c
    int j;
};

struct CliffordWord {
    Rational s{1};
    std::vector<CliffordAtom> atoms;

    // transferred = true replaces every \hat{c}(e_j) by \hat{c}(\hat{e}_j).
    SuperOperator to_operator(bool transferred) const;
};

// Materialized operator with every \hat{c}(e_j) literal moved to the hatted
// copy \hat{c}(\hat{e}_j); c(e_j) literals are unchanged.
SuperOperator hat_transfer(const CliffordWord& w);

// Berezin integral: kills hatted degree < m; on alpha ^ \hat{e}^1..\hat{e}^m
// returns (-1)^{m(m+1)/2} pi^{-m/2} alpha.
ExactElement berezin_integral(const ExactElement& x);

// Residual of Tr_s[G] e^1..e^m  -  (4 pi)^{m/2} s^m \int^B [\hat{G}]^max,
// evaluated exactly (zero iff the bridge identity holds for the word).
ExactScalar bridge_residual(const CliffordWord& word, int m);

}  // namespace qgt::ext
