#include "law_support.hpp"

#include <algorithm>

namespace magnitude::detail {
namespace {

const std::vector<ModelId> all_models = {ModelId::nat, ModelId::rat, ModelId::real};
const std::vector<ModelId> exact_models = {ModelId::nat, ModelId::rat};
const std::vector<ModelId> symmetric_models = {ModelId::rat, ModelId::real};
const std::vector<ModelId> nat_only = {ModelId::nat};
const std::vector<ModelId> rat_only = {ModelId::rat};
const std::vector<ModelId> real_only = {ModelId::real};

Element prod(const Element& x, const Element& y, const LawContext& c) { return product(x, y, c.policy); }
Element minus(const Element& b, const Element& a, const LawContext& c) { return c.hooks->subtract(b, a); }
bool coin(const Element& e) { return e.as_nat() == Nat(2); }

/// Equal to a but built along a different path where the model allows it.
Element copy_of(const Element& a) {
    if (a.model() == ModelId::nat) return a;
    Element half = shrink_below(a, Nat(1));
    return combine(half, half);
}

HomElement H(const Element& r, const LawContext& c) { return psi(r, c.model); }
Element at(const HomElement& h, const Element& x, const LawContext& c) { return eval(h.repr(), x, c.policy); }
Verdict same_at(const HomElement& f, const HomElement& g, const Element& x, const LawContext& c) {
    return expect_same(at(f, x, c), at(g, x, c), c);
}

/// An embedding of the model into itself fixed by an anchor pair.
HomElement anchored(const Element& a0, const Element& t, const LawContext& c) {
    switch (c.model) {
    case ModelId::nat: return HomElement(anchor_embedding(a0, prod(a0, t, c)));
    case ModelId::rat: return HomElement(anchor_embedding(a0, t));
    case ModelId::real: break;
    }
    return HomElement(anchor_embedding(a0.exact_value() ? a0 : unit_of(ModelId::real), t));
}

ApproxPolicy hom_policy(const LawContext& c) { return c.policy; }

OrderTag nat_relation(const Nat& m, const Nat& n) { return tag_of(m <=> n); }

bool is_equal_verdict(RatioVerdict v, const Element& sample) {
    return v == RatioVerdict::equal || (v == RatioVerdict::unknown && sample.model() == ModelId::real);
}

MulReal M(const Element& x) { return into_mul(x.as_real()); }
PosRat Q(const Element& y) { return *y.exact_value(); }

const PosReal& sqrt2() {
    static const PosReal v = real_root_of_rat(PosRat(Nat(2)), Nat(2));
    return v;
}

#define IF_FAIL(expr)                                                                                                 \
    if (Verdict v_ = (expr)) return v_

std::vector<LawDef> build_core() {
    std::vector<LawDef> laws;
    auto add = [&](std::string id, std::string anchor, const std::vector<ModelId>& models, std::string shape,
                   LawCheck check) {
        laws.push_back({{std::move(id), std::move(anchor), LawSet::core_axioms, models}, std::move(shape),
                        std::move(check)});
    };

    add("core.assoc", "(a+b)+c = a+(b+c)", all_models, "eee", [](const Inputs& v, const LawContext& c) {
        return expect_same(plus(plus(v[0], v[1]), v[2]), plus(v[0], plus(v[1], v[2])), c);
    });
    add("core.comm", "a+b = b+a", all_models, "ee", [](const Inputs& v, const LawContext& c) {
        return expect_same(plus(v[0], v[1]), plus(v[1], v[0]), c);
    });
    add("core.trichotomy-witness", "exactly one of a=b+d, a=b, b=a+d holds, with the witness d", all_models, "eec",
        [](const Inputs& v, const LawContext& c) -> Verdict {
            const Element& a = v[0];
            const Element b = coin(v[2]) ? copy_of(a) : v[1];
            const OrderTag tag = relation(a, b, c);
            if (c.model != ModelId::real) {
                auto o = compare(a, b);
                IF_FAIL(expect_tag(o.tag(), tag, "compare"));
                if (o.tag() == OrderTag::less) return expect_same(plus(a, o.difference()), b, c);
                if (o.tag() == OrderTag::greater) return expect_same(plus(b, o.difference()), a, c);
                return expect_same(a, b, c);
            }
            if (tag == OrderTag::less) return expect_same(plus(a, minus(b, a, c)), b, c);
            if (tag == OrderTag::greater) return expect_same(plus(b, minus(a, b, c)), a, c);
            return expect_same(a, b, c);
        });
    add("core.translation-invariance", "a<b implies a+c<b+c", all_models, "eeec",
        [](const Inputs& v, const LawContext& c) {
            const Element b = coin(v[3]) ? copy_of(v[0]) : v[1];
            return expect_tag(relation(plus(v[0], v[2]), plus(b, v[2]), c), relation(v[0], b, c), "a+c vs b+c");
        });
    add("core.cancellation", "a+c=b+c implies a=b", all_models, "eeec", [](const Inputs& v, const LawContext& c) {
        const Element b = coin(v[3]) ? copy_of(v[0]) : v[1];
        const bool sums_equal = relation(plus(v[0], v[2]), plus(b, v[2]), c) == OrderTag::equal;
        const bool equal = relation(v[0], b, c) == OrderTag::equal;
        return expect_true(sums_equal == equal, "a+c=b+c iff a=b");
    });
    add("core.difference-decomposition", "a<b<c implies c-a = (c-b)+(b-a)", all_models, "eee",
        [](const Inputs& v, const LawContext& c) {
            const Element& a = v[0];
            const Element b = plus(a, v[1]);
            const Element top = plus(b, v[2]);
            return expect_same(minus(top, a, c), plus(minus(top, b, c), minus(b, a, c)), c);
        });
    add("core.subtraction-smaller", "a<b implies b-a<b", all_models, "ee", [](const Inputs& v, const LawContext& c) {
        const Element b = plus(v[0], v[1]);
        return expect_tag(relation(minus(b, v[0], c), b, c), OrderTag::less, "b-a vs b");
    });
    add("core.discrete-gap", "no element lies strictly between a and a+1", nat_only, "ee",
        [](const Inputs& v, const LawContext& c) {
            const Element above = plus(v[0], v[1]);
            return expect_true(relation(above, plus(v[0], Nat(1)), c) != OrderTag::less, "a+d >= a+1");
        });
    add("core.multiple-fast-vs-naive", "double-and-add agrees with repeated addition", all_models, "me",
        [](const Inputs& v, const LawContext& c) {
            return expect_same(multiple(v[0].as_nat(), v[1]), multiple_naive(v[0].as_nat(), v[1]), c);
        });
    add("core.archimedean-least-multiple", "some multiple na exceeds b; the least one is found", all_models, "ee",
        [](const Inputs& v, const LawContext& c) -> Verdict {
            const Element& a = v[0];
            const Element& b = v[1];
            const Nat n = c.model == ModelId::real ? have_ratio_witness(a, b).first : find_multiple_exceeding(a, b);
            IF_FAIL(expect_tag(relation(multiple(n, a), b, c), OrderTag::greater, "na vs b"));
            if (n == Nat(1)) return std::nullopt;
            const Nat prev = Nat::from_mpz(n.value() - 1);
            return expect_true(relation(multiple(prev, a), b, c) != OrderTag::greater, "(n-1)a <= b");
        });
    add("core.shrink-below", "nondiscrete models have some b with nb < a", symmetric_models, "em",
        [](const Inputs& v, const LawContext& c) {
            const Element s = shrink_below(v[0], v[1].as_nat());
            return expect_tag(relation(times(v[1], s), v[0], c), OrderTag::less, "n*shrink vs a");
        });
    return laws;
}

std::vector<LawDef> build_euclid() {
    std::vector<LawDef> laws;
    auto add = [&](std::string id, std::string anchor, std::string shape, LawCheck check) {
        laws.push_back(
            {{std::move(id), std::move(anchor), LawSet::euclid_v, all_models}, std::move(shape), std::move(check)});
    };

    add("V.1-distributive-over-sum", "Prop. V.1: n(a+b) = na+nb", "mee", [](const Inputs& v, const LawContext& c) {
        return expect_same(times(v[0], plus(v[1], v[2])), plus(times(v[0], v[1]), times(v[0], v[2])), c);
    });
    add("V.2-sum-of-multipliers", "Prop. V.2: (m+n)a = ma+na", "mme", [](const Inputs& v, const LawContext& c) {
        const Element sum = v[0].as_nat() + v[1].as_nat();
        return expect_same(times(sum, v[2]), plus(times(v[0], v[2]), times(v[1], v[2])), c);
    });
    add("V.3-multiple-of-multiple", "Prop. V.3: (mn)a = m(na)", "mme", [](const Inputs& v, const LawContext& c) {
        const Element mn = v[0].as_nat() * v[1].as_nat();
        return expect_same(times(mn, v[2]), times(v[0], times(v[1], v[2])), c);
    });
    add("V.4-multiples-of-proportionals", "Prop. V.4: If a:b=a':b', then ja:kb=ja':kb'", "eeemm",
        [](const Inputs& v, const LawContext& c) {
            const Element a2 = prod(v[0], v[2], c);
            const Element b2 = prod(v[1], v[2], c);
            return expect_ratio_equal(times(v[3], v[0]), times(v[4], v[1]), times(v[3], a2), times(v[4], b2), c);
        });
    add("V.5-monotone-in-element", "Prop. V.5: na has to nb the same relation as a has to b", "eemc",
        [](const Inputs& v, const LawContext& c) -> Verdict {
            const Element& a = v[0];
            const Element b = coin(v[3]) ? copy_of(a) : v[1];
            const Element na = times(v[2], a);
            const Element nb = times(v[2], b);
            const OrderTag tag = relation(a, b, c);
            IF_FAIL(expect_tag(relation(na, nb, c), tag, "na vs nb"));
            if (tag != OrderTag::greater) return std::nullopt;
            return expect_same(minus(na, nb, c), times(v[2], minus(a, b, c)), c);
        });
    add("V.6-monotone-in-multiplier", "Prop. V.6: ma has to na the same relation as m has to n", "mme",
        [](const Inputs& v, const LawContext& c) -> Verdict {
            const Nat& m = v[0].as_nat();
            const Nat& n = v[1].as_nat();
            const Element ma = times(v[0], v[2]);
            const Element na = times(v[1], v[2]);
            IF_FAIL(expect_tag(relation(ma, na, c), nat_relation(m, n), "ma vs na"));
            if (m <= n) return std::nullopt;
            return expect_same(minus(ma, na, c), multiple(Nat::from_mpz(m.value() - n.value()), v[2]), c);
        });
    add("V.7-equals-same-ratio", "Prop. V.7: If a=b, then a:c=b:c and c:a=c:b", "ee",
        [](const Inputs& v, const LawContext& c) -> Verdict {
            const Element b = copy_of(v[0]);
            IF_FAIL(expect_ratio_equal(v[0], v[1], b, v[1], c));
            return expect_ratio_equal(v[1], v[0], v[1], b, c);
        });
    add("V.8-greater-greater-ratio", "Prop. V.8: If a>b, then a:c>b:c and c:b>c:a", "eee",
        [](const Inputs& v, const LawContext& c) -> Verdict {
            const Element& b = v[0];
            const Element a = plus(b, v[1]);
            IF_FAIL(expect_ratio_greater(a, v[2], b, v[2], c));
            return expect_ratio_greater(v[2], b, v[2], a, c);
        });
    add("V.9-same-ratio-equal", "Prop. V.9: If a:c=b:c, then a=b; if c:a=c:b, then a=b", "eeec",
        [](const Inputs& v, const LawContext& c) -> Verdict {
            const Element& a = v[0];
            const Element b = coin(v[3]) ? copy_of(a) : v[1];
            const bool equal = relation(a, b, c) == OrderTag::equal;
            IF_FAIL(expect_true(!is_equal_verdict(ratio_verdict(a, v[2], b, v[2], c), a) || equal, "a:c=b:c => a=b"));
            return expect_true(!is_equal_verdict(ratio_verdict(v[2], a, v[2], b, c), a) || equal, "c:a=c:b => a=b");
        });
    add("V.10-greater-ratio-greater", "Prop. V.10: If a:c>b:c, then a>b; if c:a>c:b, then b>a", "eee",
        [](const Inputs& v, const LawContext& c) -> Verdict {
            const Element& a = v[0];
            const Element& b = v[1];
            if (ratio_verdict(a, v[2], b, v[2], c) == RatioVerdict::greater)
                IF_FAIL(expect_tag(relation(a, b, c), OrderTag::greater, "a vs b"));
            if (ratio_verdict(v[2], a, v[2], b, c) == RatioVerdict::greater)
                IF_FAIL(expect_tag(relation(b, a, c), OrderTag::greater, "b vs a"));
            return std::nullopt;
        });
    add("V.11-ratio-transitivity", "Prop. V.11: If a:b=a':b' and a'':b''=a':b', then a:b=a'':b''", "eeee",
        [](const Inputs& v, const LawContext& c) {
            const Element a2 = prod(v[0], v[2], c);
            const Element b2 = prod(v[1], v[2], c);
            const Element a3 = prod(a2, v[3], c);
            const Element b3 = prod(b2, v[3], c);
            return expect_ratio_equal(v[0], v[1], a3, b3, c);
        });
    add("V.12-sum-of-proportionals", "Prop. V.12: If a:b=c:d, then a:b=(a+c):(b+d)", "eee",
        [](const Inputs& v, const LawContext& c) {
            const Element cc = prod(v[0], v[2], c);
            const Element d = prod(v[1], v[2], c);
            return expect_ratio_equal(v[0], v[1], plus(v[0], cc), plus(v[1], d), c);
        });
    add("V.13-equal-then-greater",
        "Prop. V.13: If a:b=a':b' and a':b'>a'':b'', then a:b>a'':b''; and symmetrically", "eeeee",
        [](const Inputs& v, const LawContext& c) -> Verdict {
            const Element a2 = prod(v[0], v[2], c);
            const Element b2 = prod(v[1], v[2], c);
            const RatioVerdict r = ratio_verdict(a2, b2, v[3], v[4], c);
            if (r == RatioVerdict::greater) return expect_ratio_greater(v[0], v[1], v[3], v[4], c);
            if (r == RatioVerdict::less) return expect_ratio_greater(v[3], v[4], v[0], v[1], c);
            return std::nullopt;
        });
    add("V.14-proportional-order", "Prop. V.14: If a:b=c:d, then a has to c the same relation as b has to d",
        "eeec", [](const Inputs& v, const LawContext& c) {
            const Element r = coin(v[3]) ? unit_of(c.model) : v[2];
            const Element cc = prod(v[0], r, c);
            const Element d = prod(v[1], r, c);
            return expect_tag(relation(v[0], cc, c), relation(v[1], d, c), "a vs c");
        });
    add("V.15-parts-and-multiples", "Prop. V.15: a:b = ka:kb", "eem", [](const Inputs& v, const LawContext& c) {
        return expect_ratio_equal(v[0], v[1], times(v[2], v[0]), times(v[2], v[1]), c);
    });
    add("V.16-alternation", "Prop. V.16: If a:b=c:d, then a:c=b:d", "eee", [](const Inputs& v, const LawContext& c) {
        const Element cc = prod(v[0], v[2], c);
        const Element d = prod(v[1], v[2], c);
        return expect_ratio_equal(v[0], cc, v[1], d, c);
    });
    add("V.17-separation", "Prop. V.17: If (a+b):b=(a'+b'):b', then a:b=a':b'", "eee",
        [](const Inputs& v, const LawContext& c) {
            const Element& b = v[1];
            const Element whole = plus(v[0], b);
            const Element whole2 = prod(whole, v[2], c);
            const Element b2 = prod(b, v[2], c);
            return expect_ratio_equal(minus(whole, b, c), b, minus(whole2, b2, c), b2, c);
        });
    add("V.18-composition", "Prop. V.18: If a:b=a':b', then (a+b):b=(a'+b'):b'", "eee",
        [](const Inputs& v, const LawContext& c) {
            const Element a2 = prod(v[0], v[2], c);
            const Element b2 = prod(v[1], v[2], c);
            return expect_ratio_equal(plus(v[0], v[1]), v[1], plus(a2, b2), b2, c);
        });
    add("V.19-remainder", "Prop. V.19: If (a+b):(c+d)=a:c, then b:d=a:c", "eee",
        [](const Inputs& v, const LawContext& c) {
            const Element& a = v[0];
            const Element cc = prod(a, v[2], c);
            const Element d = prod(v[1], v[2], c);
            const Element whole = plus(a, v[1]);
            const Element whole2 = plus(cc, d);
            return expect_ratio_equal(minus(whole, a, c), minus(whole2, cc, c), a, cc, c);
        });
    add("V.20-ex-aequali-order",
        "Prop. V.20: If a:b=a':b' and b:c=b':c', then a has to c the same relation as a' has to c'", "eeeec",
        [](const Inputs& v, const LawContext& c) {
            const Element& a = v[0];
            const Element cc = coin(v[4]) ? copy_of(a) : v[2];
            const Element a2 = prod(a, v[3], c);
            const Element c2 = prod(cc, v[3], c);
            return expect_tag(relation(a2, c2, c), relation(a, cc, c), "a' vs c'");
        });
    add("V.21-perturbed-order",
        "Prop. V.21: If a:b=b':c' and b:c=a':b', then a has to c the same relation as a' has to c'", "eeeec",
        [](const Inputs& v, const LawContext& c) {
            const Element& a = v[0];
            const Element& b = v[1];
            const Element cc = coin(v[4]) ? copy_of(a) : v[2];
            const Element ra = prod(v[3], a, c);
            const Element a2 = prod(ra, b, c);
            const Element c2 = prod(prod(v[3], b, c), cc, c);
            return expect_tag(relation(a2, c2, c), relation(a, cc, c), "a' vs c'");
        });
    add("V.22-ex-aequali", "Prop. V.22: If a:b=a':b' and b:c=b':c', then a:c=a':c'", "eeee",
        [](const Inputs& v, const LawContext& c) {
            const Element a2 = prod(v[0], v[3], c);
            const Element c2 = prod(v[2], v[3], c);
            return expect_ratio_equal(v[0], v[2], a2, c2, c);
        });
    add("V.23-perturbed-ex-aequali", "Prop. V.23: If a:b=b':c' and b:c=a':b', then a:c=a':c'", "eeee",
        [](const Inputs& v, const LawContext& c) {
            const Element& a = v[0];
            const Element& b = v[1];
            const Element& cc = v[2];
            const Element a2 = prod(prod(v[3], a, c), b, c);
            const Element c2 = prod(prod(v[3], b, c), cc, c);
            return expect_ratio_equal(a, cc, a2, c2, c);
        });
    add("V.24-sum-of-antecedents", "Prop. V.24: If a:b=c:d and e:b=f:d, then (a+e):b=(c+f):d", "eeee",
        [](const Inputs& v, const LawContext& c) {
            const Element cc = prod(v[0], v[2], c);
            const Element d = prod(v[1], v[2], c);
            const Element f = prod(v[3], v[2], c);
            return expect_ratio_equal(plus(v[0], v[3]), v[1], plus(cc, f), d, c);
        });
    return laws;
}

std::vector<LawDef> build_ratio() {
    std::vector<LawDef> laws;
    auto add = [&](std::string id, std::string anchor, const std::vector<ModelId>& models, std::string shape,
                   LawCheck check) {
        laws.push_back({{std::move(id), std::move(anchor), LawSet::ratio, models}, std::move(shape), std::move(check)});
    };

    add("ratio.engine-vs-oracle", "the engine agrees with cross-multiplication on exact models", exact_models, "eeee",
        [](const Inputs& v, const LawContext& c) {
            const mpq_class lhs = v[0].exact_value()->value() * v[3].exact_value()->value();
            const mpq_class rhs = v[2].exact_value()->value() * v[1].exact_value()->value();
            const RatioVerdict expected = lhs > rhs   ? RatioVerdict::greater
                                          : lhs < rhs ? RatioVerdict::less
                                                      : RatioVerdict::equal;
            const RatioVerdict observed = ratio_verdict(v[0], v[1], v[2], v[3], c);
            return expect_true(observed == expected, "verdict " + std::string(to_string(expected)));
        });
    add("ratio.witness-soundness", "every strict verdict carries a witness satisfying the definition", all_models,
        "eeee", [](const Inputs& v, const LawContext& c) -> Verdict {
            RatioRel r = ratio_compare(v[0], v[1], v[2], v[3], c.fuel);
            if (r.verdict == RatioVerdict::greater)
                return expect_true(r.witness && c.hooks->verify_witness(*r.witness, v[0], v[1], v[2], v[3]),
                                   "valid witness");
            if (r.verdict == RatioVerdict::less)
                return expect_true(r.witness && c.hooks->verify_witness(*r.witness, v[2], v[3], v[0], v[1]),
                                   "valid witness");
            return std::nullopt;
        });
    add("ratio.antisymmetry", "a:b>a':b' exactly when a':b'<a:b, with the same witness", all_models, "eeee",
        [](const Inputs& v, const LawContext& c) {
            RatioRel fwd = ratio_compare(v[0], v[1], v[2], v[3], c.fuel);
            RatioRel back = ratio_compare(v[2], v[3], v[0], v[1], c.fuel);
            auto flipped = [](RatioVerdict x) {
                if (x == RatioVerdict::greater) return RatioVerdict::less;
                if (x == RatioVerdict::less) return RatioVerdict::greater;
                return x;
            };
            return expect_true(back.verdict == flipped(fwd.verdict) && back.witness == fwd.witness,
                               "swapped comparison mirrors the verdict");
        });
    add("ratio.transitivity", "a:b>c:d and c:d>e:f imply a:b>e:f", all_models, "eeeeee",
        [](const Inputs& v, const LawContext& c) -> Verdict {
            const RatioVerdict first = ratio_verdict(v[0], v[1], v[2], v[3], c);
            const RatioVerdict second = ratio_verdict(v[2], v[3], v[4], v[5], c);
            if (first == RatioVerdict::greater && second == RatioVerdict::greater)
                return expect_ratio_greater(v[0], v[1], v[4], v[5], c);
            if (first == RatioVerdict::less && second == RatioVerdict::less)
                return expect_ratio_greater(v[4], v[5], v[0], v[1], c);
            return std::nullopt;
        });
    add("ratio.have-ratio", "any two magnitudes have a ratio: ma>b and nb>a for some m, n", all_models, "ee",
        [](const Inputs& v, const LawContext& c) -> Verdict {
            auto [m, n] = have_ratio_witness(v[0], v[1]);
            IF_FAIL(expect_tag(relation(multiple(m, v[0]), v[1], c), OrderTag::greater, "ma vs b"));
            IF_FAIL(expect_tag(relation(multiple(n, v[1]), v[0], c), OrderTag::greater, "nb vs a"));
            if (c.model == ModelId::real) return std::nullopt;
            if (m != Nat(1))
                IF_FAIL(expect_true(relation(multiple(Nat::from_mpz(m.value() - 1), v[0]), v[1], c) !=
                                        OrderTag::greater,
                                    "m is least"));
            if (n != Nat(1))
                IF_FAIL(expect_true(relation(multiple(Nat::from_mpz(n.value() - 1), v[1]), v[0], c) !=
                                        OrderTag::greater,
                                    "n is least"));
            return std::nullopt;
        });
    add("ratio.self-no-witness", "no witness separates a ratio from itself", all_models, "ee",
        [](const Inputs& v, const LawContext& c) { return expect_ratio_equal(v[0], v[1], v[0], v[1], c); });
    add("ratio.boundary-upgrade", "ja>kb and ja'=kb' yield (m, n) with ma>nb and ma'<nb'", exact_models, "eemme",
        [](const Inputs& v, const LawContext& c) -> Verdict {
            const Element& j = v[2];
            const Element& k = v[3];
            const Element a2 = times(k, v[0]);
            const Element b2 = times(j, v[0]);
            const Element b = times(j, v[1]);
            const Element a = plus(times(k, v[1]), v[4]);
            const Witness w = upgrade_boundary_witness({j.as_nat(), k.as_nat()}, a, b, a2, b2);
            IF_FAIL(expect_tag(relation(multiple(w.m, a), multiple(w.n, b), c), OrderTag::greater, "ma vs nb"));
            return expect_tag(relation(multiple(w.m, a2), multiple(w.n, b2), c), OrderTag::less, "ma' vs nb'");
        });
    add("ratio.homomorphism-proportionality", "an embedding preserves ratios: a:b = fa:fb", all_models, "eee",
        [](const Inputs& v, const LawContext& c) {
            const HomElement f = H(v[2], c);
            return expect_ratio_equal(v[0], v[1], at(f, v[0], c), at(f, v[1], c), c);
        });
    return laws;
}

std::vector<LawDef> build_embed() {
    std::vector<LawDef> laws;
    auto add = [&](std::string id, std::string anchor, const std::vector<ModelId>& models, std::string shape,
                   LawCheck check) {
        laws.push_back({{std::move(id), std::move(anchor), LawSet::embed, models}, std::move(shape), std::move(check)});
    };

    add("embed.fast-vs-naive", "the embedding of the naturals sends n to na", all_models, "em",
        [](const Inputs& v, const LawContext& c) {
            const EmbeddingRepr f = nat_embedding(v[0]);
            return expect_same(eval(f, v[1], c.policy), eval_naive(f, v[1].as_nat()), c);
        });
    add("embed.additivity", "f(x+y) = fx+fy", all_models, "eeee", [](const Inputs& v, const LawContext& c) {
        const HomElement f = anchored(v[0], v[1], c);
        return expect_same(at(f, plus(v[2], v[3]), c), plus(at(f, v[2], c), at(f, v[3], c)), c);
    });
    add("embed.multiples-commute", "f(na) = n(fa)", all_models, "eeem", [](const Inputs& v, const LawContext& c) {
        const HomElement f = anchored(v[0], v[1], c);
        return expect_same(at(f, times(v[3], v[2]), c), times(v[3], at(f, v[2], c)), c);
    });
    add("embed.order-preserving", "x<y implies fx<fy", all_models, "eeeec", [](const Inputs& v, const LawContext& c) {
        const HomElement f = anchored(v[0], v[1], c);
        const Element y = coin(v[4]) ? copy_of(v[2]) : v[3];
        return expect_tag(relation(at(f, v[2], c), at(f, y, c), c), relation(v[2], y, c), "fx vs fy");
    });
    add("embed.fourth-proportional-uniqueness", "a:b=a':b' has exactly one solution b'", symmetric_models, "qqee",
        [](const Inputs& v, const LawContext& c) -> Verdict {
            const PosReal a2 = to_real(v[2]);
            const PosReal b2 = fourth_proportional(v[0], v[1], a2);
            IF_FAIL(expect_ratio_equal(v[0], v[1], a2, b2, c));
            const PosReal other = real_add(b2, to_real(v[3]));
            return expect_ratio_greater(v[0], v[1], a2, other, c);
        });
    add("embed.probe-independence", "f<g at one element implies f<g at every element", all_models, "eeee",
        [](const Inputs& v, const LawContext& c) {
            const EmbeddingRepr f = H(v[0], c).repr();
            const EmbeddingRepr g = H(v[1], c).repr();
            return expect_tag(embeddings_compare(f, g, v[2], c.policy), embeddings_compare(f, g, v[3], c.policy),
                              "relation at the second probe");
        });
    add("embed.proportionality", "n:m = fn:fm for the embedding of the naturals", all_models, "mme",
        [](const Inputs& v, const LawContext& c) {
            const EmbeddingRepr f = nat_embedding(v[2]);
            return expect_ratio_equal(v[0], v[1], eval(f, v[0], c.policy), eval(f, v[1], c.policy), c);
        });
    add("embed.nat-anchor-uniqueness", "exactly one embedding of the naturals sends 1 to a'", all_models, "emmm",
        [](const Inputs& v, const LawContext& c) -> Verdict {
            const EmbeddingRepr f = nat_embedding(v[0]);
            const EmbeddingRepr g = anchor_embedding(Nat(1), v[0]);
            for (std::size_t i = 1; i < 4; ++i) {
                if (c.model == ModelId::real) {
                    IF_FAIL(expect_same(eval(f, v[i], c.policy), eval(g, v[i], c.policy), c));
                } else {
                    IF_FAIL(expect_tag(embeddings_compare(f, g, v[i], c.policy), OrderTag::equal, "f vs g"));
                }
            }
            return std::nullopt;
        });
    return laws;
}

std::vector<LawDef> build_hom() {
    std::vector<LawDef> laws;
    auto add = [&](std::string id, std::string anchor, const std::vector<ModelId>& models, std::string shape,
                   LawCheck check) {
        laws.push_back({{std::move(id), std::move(anchor), LawSet::hom, models}, std::move(shape), std::move(check)});
    };

    add("hom.add-assoc", "(f+g)+h = f+(g+h)", all_models, "eeee", [](const Inputs& v, const LawContext& c) {
        const HomElement f = H(v[0], c), g = H(v[1], c), h = H(v[2], c);
        return same_at(hom_add(hom_add(f, g), h), hom_add(f, hom_add(g, h)), v[3], c);
    });
    add("hom.add-comm", "f+g = g+f", all_models, "eee", [](const Inputs& v, const LawContext& c) {
        const HomElement f = H(v[0], c), g = H(v[1], c);
        return same_at(hom_add(f, g), hom_add(g, f), v[2], c);
    });
    add("hom.trichotomy-difference", "f<g exactly when g = f+d for an embedding d", all_models, "eeec",
        [](const Inputs& v, const LawContext& c) -> Verdict {
            const bool equal_case = coin(v[3]) && c.model != ModelId::real;
            const HomElement f = H(v[0], c);
            const HomElement g = H(equal_case ? copy_of(v[0]) : v[1], c);
            const Element x = unit_of(c.model);
            auto o = hom_compare(f, g, hom_policy(c));
            if (o.tag() == OrderTag::less) return same_at(hom_add(f, o.difference()), g, x, c);
            if (o.tag() == OrderTag::greater) return same_at(hom_add(g, o.difference()), f, x, c);
            return same_at(f, g, x, c);
        });
    add("hom.compose-distributive-left", "f(g+h) = fg+fh", all_models, "eeee", [](const Inputs& v, const LawContext& c) {
        const HomElement f = H(v[0], c), g = H(v[1], c), h = H(v[2], c);
        return same_at(hom_compose(f, hom_add(g, h)), hom_add(hom_compose(f, g), hom_compose(f, h)), v[3], c);
    });
    add("hom.compose-distributive-right", "(g+h)f = gf+hf", all_models, "eeee",
        [](const Inputs& v, const LawContext& c) {
            const HomElement f = H(v[0], c), g = H(v[1], c), h = H(v[2], c);
            return same_at(hom_compose(hom_add(g, h), f), hom_add(hom_compose(g, f), hom_compose(h, f)), v[3], c);
        });
    add("hom.compose-commutative", "endomorphisms commute: fg = gf", all_models, "eee",
        [](const Inputs& v, const LawContext& c) {
            const HomElement f = H(v[0], c), g = H(v[1], c);
            return same_at(hom_compose(f, g), hom_compose(g, f), v[2], c);
        });
    add("hom.compose-associative", "(fg)h = f(gh)", all_models, "eeee", [](const Inputs& v, const LawContext& c) {
        const HomElement f = H(v[0], c), g = H(v[1], c), h = H(v[2], c);
        return same_at(hom_compose(hom_compose(f, g), h), hom_compose(f, hom_compose(g, h)), v[3], c);
    });
    add("hom.identity-laws", "1f = f = f1", all_models, "ee", [](const Inputs& v, const LawContext& c) -> Verdict {
        const HomElement f = H(v[0], c);
        const HomElement id = identity_endo(c.model);
        IF_FAIL(same_at(hom_compose(id, f), f, v[1], c));
        return same_at(hom_compose(f, id), f, v[1], c);
    });
    add("hom.compose-order-preserving", "f<g implies fh<gh and hf<hg", all_models, "eeee",
        [](const Inputs& v, const LawContext& c) -> Verdict {
            const HomElement f = H(v[0], c), g = H(v[1], c), h = H(v[2], c);
            const OrderTag tag = hom_compare(f, g, hom_policy(c)).tag();
            IF_FAIL(expect_tag(hom_compare(hom_compose(f, h), hom_compose(g, h), hom_policy(c)).tag(), tag, "fh vs gh"));
            return expect_tag(hom_compare(hom_compose(h, f), hom_compose(h, g), hom_policy(c)).tag(), tag, "hf vs hg");
        });
    add("hom.psi-additive", "psi(a+b) = psi a + psi b", all_models, "eee", [](const Inputs& v, const LawContext& c) {
        return same_at(H(plus(v[0], v[1]), c), hom_add(H(v[0], c), H(v[1], c)), v[2], c);
    });
    add("hom.psi-surjective", "every embedding is psi of the image of the unit", all_models, "eee",
        [](const Inputs& v, const LawContext& c) {
            const HomElement f = anchored(v[0], v[1], c);
            return same_at(H(at(f, unit_of(c.model), c), c), f, v[2], c);
        });
    add("hom.psi-product-compose", "psi(ab) = (psi a)(psi b)", all_models, "eee",
        [](const Inputs& v, const LawContext& c) {
            return same_at(H(prod(v[0], v[1], c), c), hom_compose(H(v[0], c), H(v[1], c)), v[2], c);
        });
    add("hom.psi-unit-identity", "psi 1 is the identity", all_models, "e", [](const Inputs& v, const LawContext& c) {
        return expect_same(at(H(unit_of(c.model), c), v[0], c), v[0], c);
    });
    add("hom.product-commutative", "ab = ba", all_models, "ee", [](const Inputs& v, const LawContext& c) {
        return expect_same(prod(v[0], v[1], c), prod(v[1], v[0], c), c);
    });
    add("hom.product-associative", "(ab)c = a(bc)", all_models, "eee", [](const Inputs& v, const LawContext& c) {
        return expect_same(prod(prod(v[0], v[1], c), v[2], c), prod(v[0], prod(v[1], v[2], c), c), c);
    });
    add("hom.product-distributive-left", "a(b+c) = ab+ac", all_models, "eee", [](const Inputs& v, const LawContext& c) {
        return expect_same(prod(v[0], plus(v[1], v[2]), c), plus(prod(v[0], v[1], c), prod(v[0], v[2], c)), c);
    });
    add("hom.product-distributive-right", "(a+b)c = ac+bc", all_models, "eee",
        [](const Inputs& v, const LawContext& c) {
            return expect_same(prod(plus(v[0], v[1]), v[2], c), plus(prod(v[0], v[2], c), prod(v[1], v[2], c)), c);
        });
    add("hom.product-unit", "1a = a = a1", all_models, "e", [](const Inputs& v, const LawContext& c) -> Verdict {
        const Element one = unit_of(c.model);
        IF_FAIL(expect_same(prod(one, v[0], c), v[0], c));
        return expect_same(prod(v[0], one, c), v[0], c);
    });
    add("hom.product-order", "a<b implies ac<bc", all_models, "eeec", [](const Inputs& v, const LawContext& c) {
        const Element b = coin(v[3]) ? copy_of(v[0]) : v[1];
        return expect_tag(relation(prod(v[0], v[2], c), prod(b, v[2], c), c), relation(v[0], b, c), "ac vs bc");
    });
    add("hom.quotient-roundtrip", "(b/a)a = b", symmetric_models, "ee", [](const Inputs& v, const LawContext& c) {
        return expect_same(prod(quotient(v[1], v[0], c.policy), v[0], c), v[1], c);
    });
    add("hom.quotient-order", "b<c implies b/a<c/a", symmetric_models, "eeec",
        [](const Inputs& v, const LawContext& c) {
            const Element cc = coin(v[3]) ? copy_of(v[1]) : v[2];
            return expect_tag(relation(quotient(v[1], v[0], c.policy), quotient(cc, v[0], c.policy), c),
                              relation(v[1], cc, c), "b/a vs c/a");
        });
    add("hom.rational-crosscheck", "product and quotient agree with fraction arithmetic", rat_only, "ee",
        [](const Inputs& v, const LawContext& c) -> Verdict {
            IF_FAIL(expect_same(prod(v[0], v[1], c), v[0].as_rat() * v[1].as_rat(), c));
            return expect_same(quotient(v[1], v[0], c.policy), v[1].as_rat() / v[0].as_rat(), c);
        });
    return laws;
}

std::vector<LawDef> build_power() {
    std::vector<LawDef> laws;
    auto add = [&](std::string id, std::string anchor, std::string shape, LawCheck check) {
        laws.push_back({{std::move(id), std::move(anchor), LawSet::power, real_only}, std::move(shape), std::move(check)});
    };
    auto same = [](const MulReal& x, const MulReal& y, const LawContext& c) {
        return expect_same(x.value(), y.value(), c);
    };

    add("power.base-law", "(xy)^t = x^t y^t", "xxy", [same](const Inputs& v, const LawContext& c) {
        const MulReal x = M(v[0]), y = M(v[1]);
        return same(pow(mul_combine(x, y), Q(v[2])), mul_combine(pow(x, Q(v[2])), pow(y, Q(v[2]))), c);
    });
    add("power.exponent-law", "x^(s+t) = x^s x^t", "xyy", [same](const Inputs& v, const LawContext& c) {
        const MulReal x = M(v[0]);
        return same(pow(x, Q(v[1]) + Q(v[2])), mul_combine(pow(x, Q(v[1])), pow(x, Q(v[2]))), c);
    });
    add("power.monotonic", "s<t implies x^s<x^t", "xyy", [same](const Inputs& v, const LawContext& c) -> Verdict {
        const MulReal x = M(v[0]);
        const PosRat s = Q(v[1]), t = Q(v[2]);
        if (s == t) return same(pow(x, s), pow(x, t), c);
        const bool less = s < t;
        const RealOrder o = real_compare_escalating(pow(x, s).value(), pow(x, t).value(), c.policy.max_precision);
        return expect_true(o == (less ? RealOrder::less_certified : RealOrder::greater_certified),
                           "certified order of the powers");
    });
    add("power.integer-consistency", "x^m is the m-th multiplicative multiple", "xs",
        [same](const Inputs& v, const LawContext& c) {
            const MulReal x = M(v[0]);
            return same(pow(x, PosRat(v[1].as_nat())), mul_multiple(v[1].as_nat(), x), c);
        });
    add("power.root-roundtrip", "(x^(1/n))^n = x", "xs", [same](const Inputs& v, const LawContext& c) {
        const MulReal x = M(v[0]);
        return same(mul_multiple(v[1].as_nat(), nth_root(x, v[1].as_nat())), x, c);
    });
    add("power.mul-trichotomy", "x<y exactly when y = xd for some d>1", "xx",
        [same](const Inputs& v, const LawContext& c) -> Verdict {
            const MulReal x = M(v[0]), y = M(v[1]);
            auto o = mul_compare(x, y, c.policy.max_precision);
            if (o.tag() == OrderTag::less) return same(mul_combine(x, o.difference()), y, c);
            if (o.tag() == OrderTag::greater) return same(mul_combine(y, o.difference()), x, c);
            return same(x, y, c);
        });
    add("power.closure", "xy>y for x, y>1", "xx", [](const Inputs& v, const LawContext& c) {
        const MulReal x = M(v[0]), y = M(v[1]);
        return expect_tag(mul_compare(mul_combine(x, y), y, c.policy.max_precision).tag(), OrderTag::greater,
                          "xy vs y");
    });
    add("power.real-exponent-bracket", "s<t<u implies x^s<x^t<x^u for irrational t", "xy",
        [](const Inputs& v, const LawContext& c) -> Verdict {
            const MulReal x = M(v[0]);
            const PosReal t = real_mul(real_from_rat(Q(v[1])), sqrt2());
            const Interval bracket = t.approx(6);
            // an order check; 16 bits separate the bracket powers from x^t
            const unsigned p = std::min(c.precision, 16u);
            const Interval iv = pow(x, t).value().approx(p);
            const Interval lo = pow(x, bracket.lo()).value().approx(p);
            const Interval hi = pow(x, bracket.hi()).value().approx(p);
            return expect_true(lo.lo() <= iv.hi() && iv.lo() <= hi.hi(), "x^t within the bracket powers");
        });
    return laws;
}

std::vector<LawDef> build_models() {
    std::vector<LawDef> laws;
    auto add = [&](std::string id, std::string anchor, const std::vector<ModelId>& models, std::string shape,
                   LawCheck check) {
        laws.push_back({{std::move(id), std::move(anchor), LawSet::models, models}, std::move(shape), std::move(check)});
    };

    add("models.real-add-homomorphism", "rationals embed additively into the reals", real_only, "qq",
        [](const Inputs& v, const LawContext& c) {
            const PosReal x = real_mul(real_from_rat(v[0].as_rat()), sqrt2());
            const PosReal y = real_mul(real_from_rat(v[1].as_rat()), sqrt2());
            const PosReal sum = real_mul(real_from_rat(v[0].as_rat() + v[1].as_rat()), sqrt2());
            return expect_same(real_add(x, y), sum, c);
        });
    add("models.certificate-stability", "a certified order never flips at higher precision", real_only, "ee",
        [](const Inputs& v, const LawContext&) -> Verdict {
            for (unsigned p : {4u, 8u, 16u, 32u}) {
                const RealOrder o = real_compare(v[0].as_real(), v[1].as_real(), p);
                if (o == RealOrder::overlap) continue;
                IF_FAIL(expect_true(real_compare(v[0].as_real(), v[1].as_real(), 2 * p) == o, "stable certificate"));
            }
            return std::nullopt;
        });
    add("models.memo-idempotent", "repeated refinement returns the same interval", real_only, "e",
        [](const Inputs& v, const LawContext& c) {
            const Interval first = v[0].as_real().approx(c.precision);
            return expect_true(first == v[0].as_real().approx(c.precision), "identical refinements");
        });
    add("models.descriptor-truth", "descriptor flags match model behaviour", all_models, "ee",
        [](const Inputs& v, const LawContext& c) -> Verdict {
            const ModelDescriptor d = descriptor(c.model);
            auto raises = [](ErrorKind kind, const std::function<void()>& f) {
                try {
                    f();
                } catch (const MagnitudeError& e) {
                    return e.kind() == kind;
                }
                return false;
            };
            IF_FAIL(expect_true(d.symmetric != raises(ErrorKind::not_symmetric, [&] { quotient(v[0], v[1], c.policy); }),
                                "symmetric flag"));
            IF_FAIL(expect_true(d.discrete == raises(ErrorKind::discrete_model, [&] { shrink_below(v[0], Nat(1)); }),
                                "discrete flag"));
            return expect_true(d.exact_order != raises(ErrorKind::inexact_model, [&] { compare(v[0], v[1]); }),
                               "exact order flag");
        });
    add("models.width-contract", "refinement at p has width at most 2^-p and stays compatible", real_only, "e",
        [](const Inputs& v, const LawContext& c) -> Verdict {
            for (unsigned p = 0; p <= c.precision; p += 4) {
                const Interval iv = v[0].as_real().approx(p);
                IF_FAIL(expect_true(iv.width_within(p), "width within 2^-" + std::to_string(p)));
                IF_FAIL(expect_true(iv.intersects(v[0].as_real().approx(p + 8)), "compatible refinements"));
            }
            return std::nullopt;
        });
    return laws;
}

#undef IF_FAIL

} // namespace

const std::vector<LawDef>& law_registry() {
    static const std::vector<LawDef> laws = [] {
        std::vector<LawDef> out;
        for (auto build : {build_core, build_euclid, build_ratio, build_embed, build_hom, build_power, build_models}) {
            auto part = build();
            out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
        return out;
    }();
    return laws;
}

} // namespace magnitude::detail
