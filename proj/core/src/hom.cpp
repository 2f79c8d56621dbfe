#include "magnitude/hom.hpp"

namespace magnitude {
namespace {

void require_signature(const HomElement& x, const HomElement& y) {
    if (x.domain() != y.domain() || x.codomain() != y.codomain())
        fail(ErrorKind::signature_mismatch, "elements of different hom spaces");
}

Element difference(const Element& larger, const Element& smaller, const ApproxPolicy& policy) {
    if (larger.model() == ModelId::real && !(larger.exact_value() && smaller.exact_value()))
        return real_subtract(larger.as_real(), smaller.as_real(), policy.max_precision);
    if (larger.model() == ModelId::real)
        return real_from_rat(PosRat::from_mpq(larger.exact_value()->value() - smaller.exact_value()->value()));
    return subtract(larger, smaller);
}

PosReal real_quotient(const PosReal& b, const PosReal& a) {
    if (a.exact() && b.exact()) return real_from_rat(*b.exact() / *a.exact());
    Interval b0 = b.approx(0);
    Interval a0 = a.approx(0);
    const mpq_class lo = b0.lo().value() / a0.hi().value();
    const mpq_class hi = b0.hi().value() / a0.lo().value();
    return solved_real(
        [a, b](const mpq_class& c, unsigned q) {
            Interval ia = a.approx(q);
            Interval ib = b.approx(q);
            if (c * ia.hi().value() < ib.lo().value()) return Side::below;
            if (c * ia.lo().value() > ib.hi().value()) return Side::above;
            return Side::unknown;
        },
        lo, hi, "(" + b.description() + " / " + a.description() + ")");
}

} // namespace

EndoElement::EndoElement(const HomElement& h) : HomElement(h) {
    if (h.domain() != h.codomain()) fail(ErrorKind::signature_mismatch, "an endomorphism maps a model into itself");
}

Element unit_of(ModelId model) { return element_from_value(model, PosRat{}); }

EndoElement identity_endo(ModelId model) { return EndoElement(HomElement(identity_embedding(model))); }

HomElement hom_add(const HomElement& phi, const HomElement& chi) {
    require_signature(phi, chi);
    return HomElement(sum_embedding(phi.repr(), chi.repr()));
}

HomElement hom_compose(const HomElement& outer, const HomElement& inner) {
    return HomElement(compose_embedding(outer.repr(), inner.repr()));
}

HomElement psi(const Element& a_prime, ModelId domain) {
    if (domain == ModelId::nat) return HomElement(nat_embedding(a_prime));
    return HomElement(anchor_embedding(unit_of(domain), a_prime));
}

Ordering3<HomElement> hom_compare(const HomElement& phi, const HomElement& chi, const ApproxPolicy& policy) {
    require_signature(phi, chi);
    const Element probe = unit_of(phi.domain());
    const Element x = eval(phi.repr(), probe, policy);
    const Element y = eval(chi.repr(), probe, policy);
    auto tag = certified_order(x, y, policy.max_precision);
    if (!tag) fail(ErrorKind::undecided, "hom elements agree at the unit up to the policy precision");
    switch (*tag) {
    case OrderTag::less: return Ordering3<HomElement>::less_by(psi(difference(y, x, policy), phi.domain()));
    case OrderTag::greater: return Ordering3<HomElement>::greater_by(psi(difference(x, y, policy), phi.domain()));
    case OrderTag::equal: break;
    }
    return Ordering3<HomElement>::equal();
}

Element product(const Element& a, const Element& b, const ApproxPolicy& policy) {
    require_same_model(a, b);
    return eval(psi(b, a.model()).repr(), a, policy);
}

Element quotient(const Element& b, const Element& a, const ApproxPolicy&) {
    require_same_model(a, b);
    switch (a.model()) {
    case ModelId::nat:
        fail(ErrorKind::not_symmetric, "model not symmetric: nat has no quotients");
    case ModelId::rat:
        return b.as_rat() / a.as_rat();
    case ModelId::real:
        break;
    }
    return real_quotient(b.as_real(), a.as_real());
}

} // namespace magnitude
