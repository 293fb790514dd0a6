#include "qgt/exterior.hpp"

namespace qgt::ext {

ExactElement SuperOperator::apply(const ExactElement& x) const {
    ExactElement acc(x.dim());
    acc.pi_half = x.pi_half;
    for (const Term& t : terms) {
        ExactElement y = x;
        for (auto it = t.word.rbegin(); it != t.word.rend(); ++it)
            y = apply_primitive(*it, y);
        acc += y * t.coeff;
    }
    return acc;
}

SuperOperator compose(const SuperOperator& f, const SuperOperator& g) {
    SuperOperator out;
    for (const auto& tf : f.terms)
        for (const auto& tg : g.terms) {
            SuperOperator::Term t;
            t.coeff = tf.coeff * tg.coeff;
            t.word = tf.word;
            t.word.insert(t.word.end(), tg.word.begin(), tg.word.end());
            out.terms.push_back(std::move(t));
        }
    return out;
}

SuperOperator clifford(Rational s, int j, bool hatted) {
    if (!(Rational(0) < s)) throw std::invalid_argument("clifford: s must be positive");
    SuperOperator op;
    SuperOperator::Term wedge_term;
    wedge_term.coeff = ExactScalar::inv_sqrt_of(s);
    wedge_term.word = {Primitive{PrimKind::WedgeU, j}};
    SuperOperator::Term contract_term;
    contract_term.coeff = ExactScalar::sqrt_of(s);
    if (!hatted) contract_term.coeff = -contract_term.coeff;
    contract_term.word = {Primitive{PrimKind::ContractU, j}};
    op.terms = {wedge_term, contract_term};
    return op;
}

SuperOperator anticommutator(const SuperOperator& f, const SuperOperator& g) {
    SuperOperator out = compose(f, g);
    SuperOperator gf = compose(g, f);
    out.terms.insert(out.terms.end(), gf.terms.begin(), gf.terms.end());
    return out;
}

ExactScalar supertrace(const SuperOperator& op, int m) {
    ExactScalar acc;
    for (std::uint32_t u = 0; u < (1u << m); ++u) {
        ExactElement basis = ExactElement::monomial(m, u, 0u);
        const ExactElement image = op.apply(basis);
        ExactScalar diag = image.at(u, 0u);
        if (std::popcount(u) & 1) diag = -diag;
        acc += diag;
    }
    return acc;
}

SuperOperator CliffordWord::to_operator(bool transferred) const {
    SuperOperator acc;
    acc.terms = {SuperOperator::Term{ExactScalar(1), {}}};
    for (const CliffordAtom& atom : atoms) {
        SuperOperator gen;
        if (atom.hatted && transferred) {
            SuperOperator::Term wedge_term{ExactScalar::inv_sqrt_of(s),
                                           {Primitive{PrimKind::WedgeH, atom.j}}};
            SuperOperator::Term contract_term{ExactScalar::sqrt_of(s),
                                              {Primitive{PrimKind::ContractH, atom.j}}};
            gen.terms = {wedge_term, contract_term};
        } else {
            gen = clifford(s, atom.j, atom.hatted);
        }
        acc = compose(acc, gen);
    }
    return acc;
}

SuperOperator hat_transfer(const CliffordWord& w) { return w.to_operator(true); }

ExactElement berezin_integral(const ExactElement& x) {
    const int m = x.dim();
    const std::uint32_t full = (1u << m) - 1u;
    ExactElement out(m);
    out.pi_half = x.pi_half - m;
    const int sign = ((m * (m + 1) / 2) % 2 == 0) ? 1 : -1;
    for (std::uint32_t u = 0; u <= full; ++u) {
        ExactScalar c = x.at(u, full);
        if (c.is_zero()) continue;
        if (sign < 0) c = -c;
        out.at(u, 0u) = c;
    }
    if (out.is_zero()) out.pi_half = 0;
    return out;
}

ExactScalar bridge_residual(const CliffordWord& word, int m) {
    const ExactScalar lhs = supertrace(word.to_operator(false), m);

    // [G-hat]^max is the coefficient of the full wedge monomial in G-hat(1):
    // normal ordering puts wedges left of contractions, so terms containing a
    // contraction annihilate the unit.
    const SuperOperator transferred = word.to_operator(true);
    const ExactElement image = transferred.apply(ExactElement::unit(m));
    const std::uint32_t full = (1u << m) - 1u;
    ExactScalar alpha = image.at(full, full);

    // (4 pi)^{m/2} s^m against the Berezin (-1)^{m(m+1)/2} pi^{-m/2}: the pi
    // powers cancel and 4^{m/2} = 2^m stays rational.
    ExactScalar rhs = alpha;
    Rational factor = Rational(2).pow(m) * word.s.pow(m);
    if ((m * (m + 1) / 2) % 2 != 0) factor = -factor;
    rhs = rhs * ExactScalar(factor);
    return lhs - rhs;
}

}  // namespace qgt::ext
