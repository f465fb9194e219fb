#include "fusionk/backend.hpp"

#include <cctype>

namespace fusionk {

Rep tensor(const Rep& r1, const Rep& r2, const FusionBackend& backend) {
    Rep out;
    for (const auto& [a, ma] : r1.multiplicities()) {
        for (const auto& [b, mb] : r2.multiplicities()) {
            out += backend.decompose(a, b).scaled(ma * mb);
        }
    }
    return out;
}

Rep tensor_power(const Rep& r, unsigned n, const FusionBackend& backend) {
    Rep acc = Rep::single(backend.unit());
    for (unsigned i = 0; i < n; ++i) acc = tensor(acc, r, backend);
    return acc;
}

Integer dim_rep(const Rep& r, const FusionBackend& backend) {
    Integer d = 0;
    for (const auto& [l, m] : r.multiplicities()) d += m * backend.dim(l);
    return d;
}

Integer invariant_multiplicity(const Rep& r, const FusionBackend& backend) {
    return r.multiplicity(backend.unit());
}

ValidationReport validate_backend(const FusionBackend& backend, unsigned label_budget) {
    ValidationReport report;
    const std::vector<Label> labels = backend.labels_within(label_budget);
    report.checked_labels = labels.size();
    const Label& unit = backend.unit();

    for (const Label& a : labels) {
        try {
            if (backend.decompose(unit, a) != Rep::single(a) ||
                backend.decompose(a, unit) != Rep::single(a))
                report.unit_ok = false;
        } catch (const UnknownLabelError&) {
            report.unit_ok = false;  // missing unit row
        }
    }
    if (backend.dim(unit) != 1) report.unit_ok = false;

    for (const Label& a : labels) {
        for (const Label& b : labels) {
            Rep ab;
            try {
                ab = backend.decompose(a, b);
            } catch (const UnknownLabelError&) {
                report.skipped_triples += labels.size();
                continue;
            }
            if (backend.dim(a) * backend.dim(b) != dim_rep(ab, backend))
                report.dim_failures.emplace_back(a, b);
            for (const Label& c : labels) {
                try {
                    Rep left = tensor(ab, Rep::single(c), backend);
                    Rep right = tensor(Rep::single(a), backend.decompose(b, c), backend);
                    if (left != right) report.associativity_failures.push_back({a, b, c});
                } catch (const UnknownLabelError&) {
                    ++report.skipped_triples;
                }
            }
        }
    }

    for (const Label& a : labels) {
        auto da = backend.dual(a);
        if (!da) continue;
        bool bad = false;
        for (const Label& b : labels) {
            Rep ab;
            try {
                ab = backend.decompose(a, b);
            } catch (const UnknownLabelError&) {
                continue;
            }
            Integer inv = ab.multiplicity(unit);
            Integer expected = (b == *da) ? 1 : 0;
            if (inv != expected) bad = true;
        }
        if (bad) report.dual_failures.push_back(a);
    }

    return report;
}

namespace {

std::string strip_ws(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

// Splits on '+' at parenthesis depth zero.
std::vector<std::string> split_terms(const std::string& s) {
    std::vector<std::string> terms;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '+' && depth == 0) {
            terms.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    terms.push_back(cur);
    return terms;
}

}  // namespace

Rep parse_rep(const std::string& text, const FusionBackend& backend) {
    const std::string compact = strip_ws(text);
    if (compact.empty()) throw Error("empty representation expression");
    Rep out;
    for (const std::string& term : split_terms(compact)) {
        if (term.empty()) throw Error("empty term in representation expression: " + text);
        Integer coeff = 1;
        std::string label_text = term;
        std::size_t digits = 0;
        while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits])))
            ++digits;
        if (digits > 0 && digits < term.size() && term[digits] == '.') {
            coeff = parse_decimal(term.substr(0, digits));
            label_text = term.substr(digits + 1);
            if (label_text.empty()) throw Error("missing label after coefficient: " + term);
        }
        out.add(backend.parse_label(label_text), coeff);
    }
    if (out.empty()) throw Error("representation expression has no summands: " + text);
    return out;
}

}  // namespace fusionk
