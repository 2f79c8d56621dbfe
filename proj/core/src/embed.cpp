#include "magnitude/embed.hpp"

#include <algorithm>

#include "magnitude/text.hpp"
#include "sampling.hpp"
#include "stern_brocot.hpp"

namespace magnitude {

EmbeddingRepr make_repr(EmbeddingNode node) {
    return EmbeddingRepr(std::make_shared<const EmbeddingNode>(std::move(node)));
}

namespace {

using detail::Fraction;
using detail::Probe;

void require_exact_anchor(const Element& a) {
    if (!a.exact_value())
        fail(ErrorKind::unsupported_domain, "anchors must be exactly known, got " + a.to_string());
}

void require_signature(const EmbeddingRepr& x, const EmbeddingRepr& y) {
    if (x.domain() != y.domain() || x.codomain() != y.codomain())
        fail(ErrorKind::signature_mismatch, "embeddings " + x.describe() + " and " + y.describe() +
                                                " have different signatures");
}

mpz_class ceil_of(const mpq_class& v) {
    mpz_class out;
    mpz_cdiv_q(out.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return out;
}

Element eval_anchor(const Anchor& anchor, ModelId codomain, const Element& b) {
    if (certified_order(anchor.a, b, 0) == OrderTag::equal) return anchor.a_prime;
    switch (codomain) {
    case ModelId::nat: {
        // a | a_prime was checked at construction
        mpz_class per_unit = anchor.a_prime.as_nat().value() / anchor.a.as_nat().value();
        return Nat::from_mpz(per_unit * b.as_nat().value());
    }
    case ModelId::rat:
        return *anchor.a_prime.exact_value() * (*b.exact_value() / *anchor.a.exact_value());
    case ModelId::real:
        break;
    }
    if (b.model() == ModelId::real) {
        const PosRat inv = PosRat{} / *anchor.a.exact_value();
        return real_mul(real_scale(b.as_real(), inv), to_real(anchor.a_prime));
    }
    return fourth_proportional(anchor.a, b, to_real(anchor.a_prime));
}

bool same_value(const Element& x, const Element& y, const ApproxPolicy& policy) {
    auto ex = x.exact_value();
    auto ey = y.exact_value();
    if (ex && ey) return *ex == *ey;
    return to_real(x).approx(policy.precision).intersects(to_real(y).approx(policy.precision));
}

} // namespace

std::optional<OrderTag> certified_order(const Element& x, const Element& y, unsigned max_p) {
    require_same_model(x, y);
    auto ex = x.exact_value();
    auto ey = y.exact_value();
    if (ex && ey) return tag_of(*ex <=> *ey);
    switch (real_compare_escalating(x.as_real(), y.as_real(), max_p)) {
    case RealOrder::less_certified: return OrderTag::less;
    case RealOrder::greater_certified: return OrderTag::greater;
    case RealOrder::overlap: break;
    }
    return std::nullopt;
}

std::string EmbeddingRepr::describe() const { return to_json(*this).dump(); }

EmbeddingRepr nat_embedding(const Element& a_prime) {
    return make_repr({UnitMultiple{a_prime}, ModelId::nat, a_prime.model()});
}

EmbeddingRepr anchor_embedding(const Element& a, const Element& a_prime) {
    require_exact_anchor(a);
    const ModelId domain = a.model();
    const ModelId codomain = a_prime.model();
    if (domain == ModelId::real && codomain != ModelId::real)
        fail(ErrorKind::unsupported_codomain, "the reals embed only into the reals");
    if (codomain == ModelId::nat) {
        if (domain != ModelId::nat)
            fail(ErrorKind::unsupported_codomain, "only the naturals embed into the naturals");
        if (a_prime.as_nat().value() % a.as_nat().value() != 0)
            fail(ErrorKind::unsupported_codomain,
                 a_prime.to_string() + " is not a multiple of " + a.to_string() + "; no embedding into nat");
    }
    return make_repr({Anchor{a, a_prime}, domain, codomain});
}

EmbeddingRepr identity_embedding(ModelId model) { return make_repr({IdentityRepr{}, model, model}); }

EmbeddingRepr sum_embedding(const EmbeddingRepr& left, const EmbeddingRepr& right) {
    require_signature(left, right);
    return make_repr({SumOf{left, right}, left.domain(), left.codomain()});
}

EmbeddingRepr compose_embedding(const EmbeddingRepr& outer, const EmbeddingRepr& inner) {
    if (inner.codomain() != outer.domain())
        fail(ErrorKind::signature_mismatch, "cannot compose " + outer.describe() + " after " + inner.describe());
    return make_repr({ComposeOf{outer, inner}, inner.domain(), outer.codomain()});
}

Element eval(const EmbeddingRepr& phi, const Element& b, const ApproxPolicy& policy) {
    if (b.model() != phi.domain())
        fail(ErrorKind::model_mismatch, "cannot evaluate an embedding on " + std::string(to_string(phi.domain())) +
                                            " at a " + std::string(to_string(b.model())) + " element");
    return std::visit(
        [&](const auto& v) -> Element {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, UnitMultiple>) {
                return multiple(b.as_nat(), v.image);
            } else if constexpr (std::is_same_v<V, Anchor>) {
                return eval_anchor(v, phi.codomain(), b);
            } else if constexpr (std::is_same_v<V, IdentityRepr>) {
                return b;
            } else if constexpr (std::is_same_v<V, SumOf>) {
                return combine(eval(v.left, b, policy), eval(v.right, b, policy));
            } else {
                return eval(v.outer, eval(v.inner, b, policy), policy);
            }
        },
        phi.node().variant);
}

Element eval_naive(const EmbeddingRepr& phi, const Nat& n) {
    const auto* unit = std::get_if<UnitMultiple>(&phi.node().variant);
    if (!unit) fail(ErrorKind::invalid_argument, "eval_naive applies to unit-multiple embeddings only");
    if (n > Nat(naive_guard)) fail(ErrorKind::guard_exceeded, "eval_naive is limited to n <= 65536");
    // phi(1) = image; phi(k + 1) = phi(k) + image
    Element acc = unit->image;
    for (std::uint64_t k = 1; k < n.to_u64(); ++k) acc = combine(acc, unit->image);
    return acc;
}

PosReal fourth_proportional(const Element& a_in, const Element& b_in, const PosReal& a_prime) {
    require_same_model(a_in, b_in);
    require_exact_anchor(a_in);
    require_exact_anchor(b_in);
    if (*a_in.exact_value() == *b_in.exact_value()) return a_prime;
    if (a_prime.exact()) return real_from_rat(*a_prime.exact() * (*b_in.exact_value() / *a_in.exact_value()));
    // exactly known reals are walked in the rational model
    const Element a = a_in.model() == ModelId::real ? Element(*a_in.exact_value()) : a_in;
    const Element b = b_in.model() == ModelId::real ? Element(*b_in.exact_value()) : b_in;

    return PosReal(
        [a, b, a_prime](unsigned p) {
            // Bracket b:a by fractions n/m, deciding each by comparing the
            // multiples mb and na in the domain.
            const mpq_class tol = dyadic_unit(p + 1) / ceil_of(a_prime.approx(0).hi().value());
            auto walk = detail::stern_brocot_search(
                [&](const Fraction& f) {
                    auto o = compare(multiple(Nat::from_mpz(f.m), b), multiple(Nat::from_mpz(f.n), a));
                    if (o.tag() == OrderTag::greater) return Probe::go_right;
                    if (o.tag() == OrderTag::less) return Probe::go_left;
                    return Probe::hit;
                },
                UINT64_MAX,
                [&](const Fraction& l, const Fraction& r) {
                    return l.n > 0 && r.m > 0 && mpq_class(1, l.m * r.m) <= tol;
                });
            mpq_class lo = walk.hit ? mpq_class(walk.hit->n, walk.hit->m) : mpq_class(walk.left.n, walk.left.m);
            mpq_class hi = walk.hit ? lo : mpq_class(walk.right.n, walk.right.m);
            lo.canonicalize();
            hi.canonicalize();
            const unsigned q = p + 1 + static_cast<unsigned>(mpz_sizeinbase(ceil_of(hi).get_mpz_t(), 2));
            Interval ap = a_prime.approx(q);
            return Interval(PosRat::from_mpq(lo * ap.lo().value()), PosRat::from_mpq(hi * ap.hi().value()));
        },
        "fourth(" + a.to_string() + ", " + b.to_string() + ", " + a_prime.description() + ")");
}

HomCheckReport check_homomorphism(const ElementMap& map, ModelId domain, std::uint64_t samples,
                                  std::uint64_t seed, const ApproxPolicy& policy) {
    if (samples < 1) fail(ErrorKind::invalid_argument, "samples must be at least 1");
    HomCheckReport report;
    report.seed = seed;
    detail::SampleSource source(seed);

    auto find_failure = [&](const Element& a, const Element& b) -> std::optional<HomCheckFailure> {
        Element lhs = map(combine(a, b));
        Element rhs = combine(map(a), map(b));
        if (!same_value(lhs, rhs, policy))
            return HomCheckFailure{"additivity", a, b, "image " + lhs.to_string(), rhs.to_string()};
        OrderTag before = *certified_order(a, b, policy.max_precision);
        auto after = certified_order(map(a), map(b), policy.max_precision);
        if (after && *after != before)
            return HomCheckFailure{"order", a, b, std::string(to_string(*after)), std::string(to_string(before))};
        return std::nullopt;
    };

    for (std::uint64_t i = 0; i < samples; ++i) {
        ++report.samples;
        Element a = source.exact(domain);
        Element b = source.exact(domain);
        if (!find_failure(a, b)) continue;
        auto shrunk = detail::shrink_all({a, b}, [&](const std::vector<Element>& xs) {
            return find_failure(xs[0], xs[1]).has_value();
        });
        report.failure = find_failure(shrunk[0], shrunk[1]);
        break;
    }
    return report;
}

HomCheckReport check_homomorphism(const EmbeddingRepr& phi, std::uint64_t samples, std::uint64_t seed,
                                  const ApproxPolicy& policy) {
    return check_homomorphism([&](const Element& x) { return eval(phi, x, policy); }, phi.domain(), samples, seed,
                              policy);
}

OrderTag embeddings_compare(const EmbeddingRepr& phi, const EmbeddingRepr& chi, const Element& probe,
                            const ApproxPolicy& policy) {
    require_signature(phi, chi);
    auto tag = certified_order(eval(phi, probe, policy), eval(chi, probe, policy), policy.max_precision);
    if (!tag)
        fail(ErrorKind::undecided, "embeddings agree at " + probe.to_string() + " up to precision " +
                                       std::to_string(policy.max_precision));
    return *tag;
}

nlohmann::json to_json(const EmbeddingRepr& phi) {
    using nlohmann::json;
    return std::visit(
        [&](const auto& v) -> json {
            using V = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<V, UnitMultiple>) {
                return {{"tag", "unit_multiple"}, {"codomain", to_string(phi.codomain())},
                        {"image", v.image.to_string()}};
            } else if constexpr (std::is_same_v<V, Anchor>) {
                return {{"tag", "anchor"}, {"domain", to_string(phi.domain())},
                        {"codomain", to_string(phi.codomain())}, {"a", v.a.to_string()},
                        {"a_prime", v.a_prime.to_string()}};
            } else if constexpr (std::is_same_v<V, IdentityRepr>) {
                return {{"tag", "identity"}, {"model", to_string(phi.domain())}};
            } else if constexpr (std::is_same_v<V, SumOf>) {
                return {{"tag", "sum"}, {"left", to_json(v.left)}, {"right", to_json(v.right)}};
            } else {
                return {{"tag", "compose"}, {"outer", to_json(v.outer)}, {"inner", to_json(v.inner)}};
            }
        },
        phi.node().variant);
}

EmbeddingRepr embedding_from_json(const nlohmann::json& j) {
    auto field = [&](const char* key) -> const nlohmann::json& {
        if (!j.is_object() || !j.contains(key))
            fail(ErrorKind::parse, std::string("embedding JSON lacks field '") + key + "'");
        return j.at(key);
    };
    auto text = [&](const char* key) {
        const auto& v = field(key);
        if (!v.is_string()) fail(ErrorKind::parse, std::string("embedding field '") + key + "' must be a string");
        return v.get<std::string>();
    };
    const std::string tag = text("tag");
    if (tag == "unit_multiple")
        return nat_embedding(parse_element(parse_model(text("codomain")), text("image")));
    if (tag == "anchor")
        return anchor_embedding(parse_element(parse_model(text("domain")), text("a")),
                                parse_element(parse_model(text("codomain")), text("a_prime")));
    if (tag == "identity") return identity_embedding(parse_model(text("model")));
    if (tag == "sum") return sum_embedding(embedding_from_json(field("left")), embedding_from_json(field("right")));
    if (tag == "compose")
        return compose_embedding(embedding_from_json(field("outer")), embedding_from_json(field("inner")));
    fail(ErrorKind::parse, "unknown embedding tag '" + tag + "'");
}

} // namespace magnitude
