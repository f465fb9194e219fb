#pragma once

#include <compare>
#include <cstddef>
#include <string>

namespace fusionk {

// An irreducible-representation label. `id` is the canonical token: two labels
// denote the same irreducible iff their ids are equal bit-for-bit. `display`
// is what reports print; for builtin backends it usually equals the id.
//
// The total order is "natural": maximal digit runs inside the id compare by
// numeric value, everything else bytewise, so "(2)" < "(10)" and
// "(0,2)" < "(1,0)". Ties on numeric value (leading zeros) and everything
// else fall back to plain string order, keeping the order total.
class Label {
public:
    Label() = default;
    Label(std::string id, std::string display)
        : id_(std::move(id)), display_(std::move(display)) {}

    // Label whose display form is the canonical token itself.
    static Label simple(std::string token) {
        std::string copy = token;
        return Label(std::move(token), std::move(copy));
    }

    const std::string& id() const { return id_; }
    const std::string& display() const { return display_; }

    bool operator==(const Label& o) const { return id_ == o.id_; }

    std::strong_ordering operator<=>(const Label& o) const {
        int c = natural_compare(id_, o.id_);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    static bool is_digit(char c) { return c >= '0' && c <= '9'; }

    static int natural_compare(const std::string& a, const std::string& b) {
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (is_digit(a[i]) && is_digit(b[j])) {
                std::size_t i0 = i, j0 = j;
                while (i < a.size() && is_digit(a[i])) ++i;
                while (j < b.size() && is_digit(b[j])) ++j;
                std::size_t ia = i0, jb = j0;  // skip leading zeros
                while (ia + 1 < i && a[ia] == '0') ++ia;
                while (jb + 1 < j && b[jb] == '0') ++jb;
                std::size_t la = i - ia, lb = j - jb;
                if (la != lb) return la < lb ? -1 : 1;
                int c = a.compare(ia, la, b, jb, lb);
                if (c != 0) return c < 0 ? -1 : 1;
            } else {
                if (a[i] != b[j]) return a[i] < b[j] ? -1 : 1;
                ++i;
                ++j;
            }
        }
        if (i < a.size()) return 1;
        if (j < b.size()) return -1;
        return a.compare(b) < 0 ? -1 : (a == b ? 0 : 1);
    }

    std::string id_;
    std::string display_;
};

}  // namespace fusionk
