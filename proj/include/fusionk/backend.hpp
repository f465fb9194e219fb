#pragma once

#include "fusionk/integer.hpp"
#include "fusionk/label.hpp"
#include "fusionk/rep.hpp"

#include <array>
#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fusionk {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A label (or a pair product) the backend cannot produce.
class UnknownLabelError : public Error {
public:
    using Error::Error;
};

// Fusion-table document violates the schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

// Ingested table failed the automatic axiom validation.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A required hypothesis (e.g. Condition C3) is not established.
class GateError : public Error {
public:
    using Error::Error;
};

// A set of fusion rules: unit label, exact pairwise decompositions, optional
// duals, exact dimensions. Decompositions are memoized per backend instance;
// the cache is invisible in results and safe to share across threads.
//
// Backends may have infinite label sets (U(1), SU(N)); labels_within() is the
// explicit budgeted enumeration every whole-universe scan runs on.
class FusionBackend {
public:
    virtual ~FusionBackend() = default;

    virtual const std::string& name() const = 0;
    virtual const Label& unit() const = 0;
    virtual std::optional<Label> dual(const Label& l) const = 0;
    virtual Integer dim(const Label& l) const = 0;
    virtual Label parse_label(const std::string& text) const = 0;
    virtual std::vector<Label> labels_within(unsigned budget) const = 0;

    Rep decompose(const Label& a, const Label& b) const {
        const auto key = std::make_pair(a.id(), b.id());
        {
            std::shared_lock lock(cache_mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return it->second;
        }
        Rep result = decompose_impl(a, b);
        std::unique_lock lock(cache_mutex_);
        return cache_.emplace(key, std::move(result)).first->second;
    }

protected:
    virtual Rep decompose_impl(const Label& a, const Label& b) const = 0;

private:
    mutable std::map<std::pair<std::string, std::string>, Rep> cache_;
    mutable std::shared_mutex cache_mutex_;
};

// Bilinear extension of the pairwise decomposition rule.
Rep tensor(const Rep& r1, const Rep& r2, const FusionBackend& backend);

// n-th iterated tensor power; n = 0 gives the unit representation.
Rep tensor_power(const Rep& r, unsigned n, const FusionBackend& backend);

// Σ_t mult(t)·dim(t), exact.
Integer dim_rep(const Rep& r, const FusionBackend& backend);

// Multiplicity of the unit label in r.
Integer invariant_multiplicity(const Rep& r, const FusionBackend& backend);

struct ValidationReport {
    bool unit_ok = true;
    std::vector<std::array<Label, 3>> associativity_failures;
    std::vector<Label> dual_failures;
    std::vector<std::pair<Label, Label>> dim_failures;
    std::size_t checked_labels = 0;
    // Triples a truncated table could not produce (skipped, not failed).
    std::size_t skipped_triples = 0;

    bool passed() const {
        return unit_ok && associativity_failures.empty() && dual_failures.empty() &&
               dim_failures.empty();
    }
};

// Checks the fusion-semiring axioms over all labels within the budget:
// unit law on both sides, associativity on all producible triples, the
// dimension homomorphism on all pairs, and the Frobenius condition
// mult_unit(a⊗b) = [b = dual(a)] when duals are present. Records failures,
// never aborts mid-scan.
ValidationReport validate_backend(const FusionBackend& backend, unsigned label_budget);

// Parses the additive grammar: terms "k.<label>" or "<label>" joined by "+",
// whitespace insensitive, '+' inside parentheses belongs to the label.
Rep parse_rep(const std::string& text, const FusionBackend& backend);

}  // namespace fusionk
