#pragma once

#include "magnitude/embed.hpp"

namespace magnitude {

/// An element of H(M, M'): the embeddings from one model into another form a
/// magnitude space under pointwise sum.
class HomElement {
public:
    explicit HomElement(EmbeddingRepr repr) : repr_(std::move(repr)) {}

    const EmbeddingRepr& repr() const noexcept { return repr_; }
    ModelId domain() const noexcept { return repr_.domain(); }
    ModelId codomain() const noexcept { return repr_.codomain(); }

private:
    EmbeddingRepr repr_;
};

/// An endomorphism: domain and codomain coincide.
class EndoElement : public HomElement {
public:
    explicit EndoElement(const HomElement& h);
};

/// The designated unit 1 of a model.
Element unit_of(ModelId model);

EndoElement identity_endo(ModelId model);

HomElement hom_add(const HomElement& phi, const HomElement& chi);

/// outer o inner
HomElement hom_compose(const HomElement& outer, const HomElement& inner);

/// Compares at the domain unit. A strict result carries the difference
/// embedding delta, the element of H(M, M') mapping 1 to the gap of the images.
Ordering3<HomElement> hom_compare(const HomElement& phi, const HomElement& chi, const ApproxPolicy& policy = {});

/// The unique embedding of `domain` sending its unit to a_prime.
HomElement psi(const Element& a_prime, ModelId domain);

/// a * b = (psi b) a, within one model.
Element product(const Element& a, const Element& b, const ApproxPolicy& policy = {});

/// The d with d * a = b. Symmetric models only; real quotients are refined by
/// bisection on d against certified comparisons of d * a with b.
Element quotient(const Element& b, const Element& a, const ApproxPolicy& policy = {});

} // namespace magnitude
