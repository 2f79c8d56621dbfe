#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include <nlohmann/json.hpp>

#include "magnitude/element.hpp"

namespace magnitude {

/// Precision settings for evaluations whose results must be compared.
/// Real values themselves stay lazy; only comparisons consult the policy.
struct ApproxPolicy {
    unsigned precision = 30;
    unsigned max_precision = 1024;
};

/// Certified order of two elements of one model. Exact models always decide;
/// real elements escalate up to max_p and yield nullopt when still overlapping.
std::optional<OrderTag> certified_order(const Element& x, const Element& y, unsigned max_p);

struct EmbeddingNode;

/// An embedding between two shipped models, reified as data.
class EmbeddingRepr {
public:
    ModelId domain() const noexcept;
    ModelId codomain() const noexcept;
    const EmbeddingNode& node() const noexcept { return *node_; }

    std::string describe() const;

private:
    explicit EmbeddingRepr(std::shared_ptr<const EmbeddingNode> node) : node_(std::move(node)) {}
    friend EmbeddingRepr make_repr(EmbeddingNode node);

    std::shared_ptr<const EmbeddingNode> node_;
};

/// n -> n * image; domain is nat.
struct UnitMultiple {
    Element image;
};

/// b -> the fourth proportional to (a, b, a_prime).
struct Anchor {
    Element a;
    Element a_prime;
};

struct IdentityRepr {};

/// (left + right) b = left b + right b
struct SumOf {
    EmbeddingRepr left;
    EmbeddingRepr right;
};

/// (outer o inner) b = outer(inner b)
struct ComposeOf {
    EmbeddingRepr outer;
    EmbeddingRepr inner;
};

struct EmbeddingNode {
    std::variant<UnitMultiple, Anchor, IdentityRepr, SumOf, ComposeOf> variant;
    ModelId domain;
    ModelId codomain;
};

inline ModelId EmbeddingRepr::domain() const noexcept { return node_->domain; }
inline ModelId EmbeddingRepr::codomain() const noexcept { return node_->codomain; }

/// The unique embedding of the naturals sending 1 to a_prime.
EmbeddingRepr nat_embedding(const Element& a_prime);

/// The unique embedding sending a to a_prime. The domain must be nat or rat
/// (or real with an exactly known anchor a); a nat codomain needs a | a_prime.
EmbeddingRepr anchor_embedding(const Element& a, const Element& a_prime);

EmbeddingRepr identity_embedding(ModelId model);
EmbeddingRepr sum_embedding(const EmbeddingRepr& left, const EmbeddingRepr& right);
EmbeddingRepr compose_embedding(const EmbeddingRepr& outer, const EmbeddingRepr& inner);

Element eval(const EmbeddingRepr& phi, const Element& b, const ApproxPolicy& policy = {});

/// Literal recursion phi(n) = phi(n - 1) + image for UnitMultiple; n <= 2^16.
Element eval_naive(const EmbeddingRepr& phi, const Nat& n);

/// b' with a:b = a':b'. a and b come from an exact model. The b:a bracket is
/// located by a Stern-Brocot walk that only compares multiples mb and na;
/// the result is a lazy real valid at every precision.
PosReal fourth_proportional(const Element& a, const Element& b, const PosReal& a_prime);

struct HomCheckFailure {
    std::string property; // "additivity" or "order"
    Element a;
    Element b;
    std::string observed;
    std::string expected;
};

struct HomCheckReport {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::optional<HomCheckFailure> failure;

    bool passed() const noexcept { return !failure; }
};

using ElementMap = std::function<Element(const Element&)>;

/// Tests additivity and order preservation of `map` on random pairs drawn
/// from `domain`; a failing pair is shrunk before it is reported.
HomCheckReport check_homomorphism(const ElementMap& map, ModelId domain, std::uint64_t samples,
                                  std::uint64_t seed, const ApproxPolicy& policy = {});
HomCheckReport check_homomorphism(const EmbeddingRepr& phi, std::uint64_t samples, std::uint64_t seed,
                                  const ApproxPolicy& policy = {});

/// Relation of phi to chi, read off at a single probe. Throws undecided when
/// real images overlap at the policy limit.
OrderTag embeddings_compare(const EmbeddingRepr& phi, const EmbeddingRepr& chi, const Element& probe,
                            const ApproxPolicy& policy = {});

nlohmann::json to_json(const EmbeddingRepr& phi);
EmbeddingRepr embedding_from_json(const nlohmann::json& j);

} // namespace magnitude
