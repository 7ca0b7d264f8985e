#pragma once

#include "isophase/combinatorics.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace isophase {

/// Largest nesting depth accepted by ackermann_encode.
inline constexpr int kMaxEncodeDepth = 6;
/// Largest member code (as a bit index) that encode will materialise.
inline constexpr std::uint64_t kMaxEncodeExponent = std::uint64_t{1} << 24;

/// Finite set whose members are again hereditarily finite sets. Members are
/// kept sorted by Ackermann code and free of duplicates.
class HereditarilyFiniteSet {
public:
    HereditarilyFiniteSet() = default;
    explicit HereditarilyFiniteSet(std::vector<HereditarilyFiniteSet> members);

    const std::vector<HereditarilyFiniteSet>& members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(const HereditarilyFiniteSet& x) const;
    /// 0 for the empty set, otherwise 1 + the deepest member.
    int depth() const;

    /// The von Neumann ordinal k = {0, ..., k-1}.
    static HereditarilyFiniteSet von_neumann(std::uint32_t k);

    /// Same order as the Ackermann codes, computed without big integers.
    friend std::strong_ordering operator<=>(const HereditarilyFiniteSet& a, const HereditarilyFiniteSet& b);
    friend bool operator==(const HereditarilyFiniteSet& a, const HereditarilyFiniteSet& b);

private:
    std::vector<HereditarilyFiniteSet> members_;
};

/// Brace notation: {} is the empty set, {{},{{}}} is von Neumann 2.
std::string to_string(const HereditarilyFiniteSet& s);
/// Inverse of to_string; whitespace is ignored. Throws ParseError.
HereditarilyFiniteSet parse_hf_set(std::string_view text);

/// Edge relation of the BIT graph: bit a of b or bit b of a is set.
/// Throws DomainError when a == b.
bool bit_adjacent(std::uint64_t a, std::uint64_t b);
bool bit_adjacent(const BigInt& a, const BigInt& b);

/// A(s) = sum over members b of 2^{A(b)}. Throws ScaleError beyond
/// kMaxEncodeDepth or kMaxEncodeExponent.
BigInt ackermann_encode(const HereditarilyFiniteSet& s);
/// Inverse of ackermann_encode; members are the set bits of n. Throws
/// DomainError for negative n.
HereditarilyFiniteSet ackermann_decode(const BigInt& n);

/// z = sum_{u in U} 2^u + 2^K with K = 1 + max(U or V), or K = 0 when both are
/// empty. z is adjacent to every u, to no v, and lies outside U and V.
/// Throws DomainError if U and V intersect.
BigInt extension_witness(const std::vector<std::uint64_t>& u_set, const std::vector<std::uint64_t>& v_set);

} // namespace isophase
