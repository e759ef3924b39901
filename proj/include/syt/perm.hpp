#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace syt {

/// Permutation of {1..n} in one-line notation.
class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<int> one_line) : v_(std::move(one_line)) {
        const int n = static_cast<int>(v_.size());
        std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
        for (int x : v_) {
            if (x < 1 || x > n || seen[static_cast<std::size_t>(x)])
                throw std::invalid_argument("not a permutation of 1..n");
            seen[static_cast<std::size_t>(x)] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
        return Permutation(std::move(v));
    }

    /// Longest element [n, n-1, ..., 1].
    static Permutation longest(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
        return Permutation(std::move(v));
    }

    int size() const { return static_cast<int>(v_.size()); }
    int operator()(int i) const { return v_[static_cast<std::size_t>(i) - 1]; }  // 1-based
    const std::vector<int>& one_line() const { return v_; }

    Permutation inverse() const {
        std::vector<int> inv(v_.size());
        for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i)) - 1] = i;
        return Permutation(std::move(inv));
    }

    bool is_involution() const {
        for (int i = 1; i <= size(); ++i)
            if ((*this)((*this)(i)) != i) return false;
        return true;
    }

    bool is_fixed_point_free() const {
        for (int i = 1; i <= size(); ++i)
            if ((*this)(i) == i) return false;
        return true;
    }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ", ";
            s += std::to_string(v_[i]);
        }
        return s + "]";
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.v_ <=> b.v_; }

private:
    std::vector<int> v_;
};

/// (a ∘ b)(i) = a(b(i)).
inline Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> v(static_cast<std::size_t>(a.size()));
    for (int i = 1; i <= a.size(); ++i) v[static_cast<std::size_t>(i) - 1] = a(b(i));
    return Permutation(std::move(v));
}

}  // namespace syt
