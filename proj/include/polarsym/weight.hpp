#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace polarsym {

/// Integer coordinate vector: fundamental-weight coordinates per simple
/// factor, then torus coordinates.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t dim) : c_(dim, 0) {}
    explicit Weight(std::vector<int> coords) : c_(std::move(coords)) {}
    Weight(std::initializer_list<int> coords) : c_(coords) {}

    std::size_t size() const { return c_.size(); }
    int operator[](std::size_t i) const { return c_[i]; }
    int& operator[](std::size_t i) { return c_[i]; }
    const std::vector<int>& coords() const { return c_; }
    auto begin() const { return c_.begin(); }
    auto end() const { return c_.end(); }

    bool is_zero() const;

    Weight operator-() const;
    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(int k, Weight a);

    auto operator<=>(const Weight&) const = default;

    /// "(1,0,0|1)": semisimple block, then torus block after '|'.
    std::string to_string(int torus_offset = -1) const;

private:
    std::vector<int> c_;
};

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept;
};

}  // namespace polarsym
