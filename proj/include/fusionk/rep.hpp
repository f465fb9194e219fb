#pragma once

#include "fusionk/integer.hpp"
#include "fusionk/label.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace fusionk {

// A virtual representation restricted to the positive cone: a finitely
// supported map from irreducible labels to non-negative multiplicities.
// No zero entries are ever stored; iteration over the support follows the
// canonical label order, which keeps every report deterministic.
class Rep {
public:
    using Map = std::map<Label, Integer>;

    Rep() = default;

    static Rep single(const Label& l, Integer mult = 1) {
        Rep r;
        r.add(l, mult);
        return r;
    }

    const Map& multiplicities() const { return mult_; }

    Integer multiplicity(const Label& l) const {
        auto it = mult_.find(l);
        return it == mult_.end() ? Integer(0) : it->second;
    }

    bool empty() const { return mult_.empty(); }
    std::size_t support_size() const { return mult_.size(); }

    // Number of irreducible summands counted with multiplicity.
    Integer total_multiplicity() const {
        Integer t = 0;
        for (const auto& [l, m] : mult_) t += m;
        return t;
    }

    void add(const Label& l, const Integer& m) {
        if (m < 0) throw std::invalid_argument("Rep multiplicities are non-negative");
        if (m == 0) return;
        mult_[l] += m;
    }

    Rep& operator+=(const Rep& o) {
        for (const auto& [l, m] : o.mult_) mult_[l] += m;
        return *this;
    }

    Rep operator+(const Rep& o) const {
        Rep r = *this;
        r += o;
        return r;
    }

    Rep scaled(const Integer& k) const {
        if (k < 0) throw std::invalid_argument("Rep scalars are non-negative");
        Rep r;
        if (k == 0) return r;
        for (const auto& [l, m] : mult_) r.mult_.emplace(l, m * k);
        return r;
    }

    // True when every multiplicity of `o` is dominated by this Rep
    // (containment of representations).
    bool contains(const Rep& o) const {
        for (const auto& [l, m] : o.mult_)
            if (multiplicity(l) < m) return false;
        return true;
    }

    bool operator==(const Rep& o) const { return mult_ == o.mult_; }

    // "(0,0) + 2.(1,1) + (3,0)" — mirrors the CLI input grammar.
    std::string to_string() const {
        if (mult_.empty()) return "0";
        std::string out;
        for (const auto& [l, m] : mult_) {
            if (!out.empty()) out += " + ";
            if (m != 1) {
                out += to_decimal(m);
                out += '.';
            }
            out += l.display();
        }
        return out;
    }

private:
    Map mult_;
};

}  // namespace fusionk
